#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsd/hypergraph.hpp"
#include "hsd/linalg.hpp"

namespace hsd {

class CoefficientRing {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  static CoefficientRing prime_field(std::uint64_t p);
  /// Accepts "z", "q", "gf<p>" and "gf(<p>)", case-insensitive.
  static CoefficientRing parse(std::string_view text);

  [[nodiscard]] Kind kind() const { return kind_; }
  /// 0 for Z and Q.
  [[nodiscard]] std::uint64_t characteristic() const { return p_; }
  [[nodiscard]] bool is_field() const { return kind_ != Kind::Integers; }
  /// "Z", "Q" or "GF<p>".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Free chain complex with integer boundary matrices; over GF(p) entries are
/// read modulo p. boundary[n] maps C_n to C_{n-1} (boundary[0] has no rows).
struct ChainComplex {
  CoefficientRing ring = CoefficientRing::integers();
  std::vector<std::size_t> sizes;
  std::vector<IntMatrix> boundary;

  [[nodiscard]] int top_dim() const { return static_cast<int>(sizes.size()) - 1; }
  /// Rank of C_n; 0 outside the stored range.
  [[nodiscard]] std::size_t size(int n) const;
  /// d_n, with the right zero shape outside the stored range.
  [[nodiscard]] IntMatrix d(int n) const;
  /// First n with d_{n-1} d_n != 0 over the ring, if any.
  [[nodiscard]] std::optional<int> square_failure() const;
};

/// Chains of a simplicial complex, basis in (dim, lex) order, face i of a
/// simplex carrying sign (-1)^i.
ChainComplex simplicial_chain_complex(const SimplicialComplex& k, CoefficientRing ring);

/// Chain complex C with the subspace D spanned by a subset of basis cells.
struct EmbeddedComplex {
  ChainComplex ambient;
  std::vector<std::vector<Simplex>> cells;          // basis of C_n
  std::vector<std::vector<std::size_t>> sub_basis;  // sorted indices spanning D_n

  [[nodiscard]] bool in_sub(int n, std::size_t cell) const;
  [[nodiscard]] std::string cell_name(int n, std::size_t cell) const;
};

/// (D(h), C(closure of h)).
EmbeddedComplex embedded_complex(const Hypergraph& h, CoefficientRing ring);
/// (D(h), C(k)) for an ambient complex k containing h. Throws
/// std::invalid_argument if some edge of h is not a simplex of k.
EmbeddedComplex embedded_complex(const Hypergraph& h, const SimplicialComplex& k,
                                 CoefficientRing ring);

/// Largest subcomplex inside D: Inf_n = {x in D_n : dx in D_{n-1}}.
struct InfimumComplex {
  /// Boundaries in the coordinates of `basis`.
  ChainComplex complex;
  /// basis[n] has one ambient column per generator, in echelon form.
  std::vector<IntMatrix> basis;
};

InfimumComplex infimum_complex(const EmbeddedComplex& e);

struct HomologyGroup {
  int dim = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1; empty over a field

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Throws std::invalid_argument if d o d != 0.
std::vector<HomologyGroup> homology(const ChainComplex& c);
std::vector<HomologyGroup> embedded_homology(const Hypergraph& h, CoefficientRing ring);

/// f_n : C_n -> C'_{n+degree}, indexed by source dimension.
struct GradedMap {
  int degree = 0;
  std::vector<IntMatrix> matrices;
};

struct CheckResult {
  bool pass = true;
  std::string detail;  // first failure, naming dimension and basis cell
  explicit operator bool() const { return pass; }
};

/// Throws std::invalid_argument when a matrix has the wrong shape.
CheckResult check_chain_map(const GradedMap& f, const ChainComplex& source,
                            const ChainComplex& target);
/// Same check, naming failing cells by their simplices.
CheckResult check_chain_map(const GradedMap& f, const EmbeddedComplex& source,
                            const EmbeddedComplex& target);
/// f(D_n) within D'_{n+degree}.
CheckResult check_embedded_condition(const GradedMap& f, const EmbeddedComplex& source,
                                     const EmbeddedComplex& target);
/// f - g = d h + h d in every dimension.
CheckResult check_homotopy_identity(const GradedMap& f, const GradedMap& g, const GradedMap& h,
                                    const EmbeddedComplex& source, const EmbeddedComplex& target);
/// The homotopy identity plus h(D_n) within D'_{n+1}.
CheckResult check_homotopy(const GradedMap& f, const GradedMap& g, const GradedMap& h,
                           const EmbeddedComplex& source, const EmbeddedComplex& target);

/// Matrix of a map on homology: rows index target generators, columns
/// source generators. Over Z this is the map on free parts over Q.
struct HomologyMatrix {
  int dim = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> entries;
};

/// Throws std::invalid_argument unless f is a degree-0 morphism of embedded
/// complexes.
std::vector<HomologyMatrix> induced_map_on_homology(const GradedMap& f,
                                                    const EmbeddedComplex& source,
                                                    const EmbeddedComplex& target);
std::vector<HomologyMatrix> induced_map_on_homology(const GradedMap& f,
                                                    const EmbeddedComplex& source,
                                                    const InfimumComplex& source_inf,
                                                    const EmbeddedComplex& target,
                                                    const InfimumComplex& target_inf);

/// Square and invertible over Q (or GF(p) for a prime field ring).
bool is_isomorphism(const HomologyMatrix& m, const CoefficientRing& ring);

}  // namespace hsd
