#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hsd/hypergraph.hpp"
#include "hsd/poset.hpp"

namespace hsd {

/// Strictly increasing nonnegative integer word (a0 < a1 < ... < an): the
/// ranks along a chain of simplices.
class RankWord {
 public:
  explicit RankWord(std::vector<int> word);

  [[nodiscard]] const std::vector<int>& word() const { return word_; }
  [[nodiscard]] std::size_t length() const { return word_.size(); }
  /// Position holding rank value r, if any.
  [[nodiscard]] std::optional<std::size_t> position_of(int r) const;
  /// Whether position k can be decremented while staying strictly increasing.
  [[nodiscard]] bool can_lower(std::size_t k) const;
  /// Word with position k decremented. Throws std::invalid_argument if not allowed.
  [[nodiscard]] RankWord lowered(std::size_t k) const;
  /// Number of decrements needed to reach (0, 1, ..., n).
  [[nodiscard]] int distance_to_flag() const;
  [[nodiscard]] bool is_flag() const { return distance_to_flag() == 0; }

  friend bool operator==(const RankWord&, const RankWord&) = default;

 private:
  std::vector<int> word_;
};

/// Lowering schedule written as the rank value refined at each step.
using Schedule = std::vector<int>;

/// Bottom-up schedule: (d0, ..., 1, d1, ..., 2, ..., dq, ..., q+1).
Schedule default_schedule(const RankWord& w);
/// Every complete schedule from w down to (0, ..., n). Throws
/// std::length_error if there are more than `limit`.
std::vector<Schedule> all_schedules(const RankWord& w, std::size_t limit = 100000);

/// Face poset of a complex answered directly from vertex lists (no
/// quadratic reachability table), used by the subdivision fast path.
/// Element ids follow SimplexIndex order.
class FacePoset {
 public:
  explicit FacePoset(SimplicialComplex k);

  [[nodiscard]] const SimplicialComplex& complex() const { return complex_; }
  [[nodiscard]] const SimplexIndex& index() const { return index_; }
  [[nodiscard]] std::size_t size() const { return index_.size(); }
  [[nodiscard]] const Simplex& simplex(ElementId e) const { return index_.at(e); }
  [[nodiscard]] int rank(ElementId e) const { return index_.at(e).dim(); }
  /// Codimension-one faces of e.
  [[nodiscard]] std::span<const ElementId> facets(ElementId e) const { return facets_.at(e); }
  [[nodiscard]] bool leq(ElementId a, ElementId b) const;
  /// Throws std::invalid_argument if `s` is not a simplex of the complex.
  [[nodiscard]] ElementId id_of(const Simplex& s) const;
  [[nodiscard]] Chain chain_of(std::initializer_list<Simplex> simplices) const;
  [[nodiscard]] RankWord rank_word(const Chain& c) const;
  [[nodiscard]] bool is_chain(const Chain& c) const;

 private:
  SimplicialComplex complex_;
  SimplexIndex index_;
  std::vector<std::vector<ElementId>> facets_;
};

/// Chains sharing one rank word, all componentwise below `base`.
struct FlagSet {
  Chain base;
  std::vector<Chain> members;  // sorted, unique
  RankWord word;
};

FlagSet make_flag_set(const FacePoset& fp, const Chain& base);

/// Replaces the rank-r component of every member by each of its facets that
/// still strictly contains the previous component. Throws
/// std::invalid_argument if r is not in the word or cannot be lowered.
FlagSet refine_step(const FacePoset& fp, const FlagSet& fs, int r);

/// All flags componentwise below x, computed by refining along `schedule`.
std::vector<Chain> initial_elements(const FacePoset& fp, const Chain& x,
                                    const Schedule& schedule);
/// Same, along the default bottom-up schedule. A flag returns {x}.
std::vector<Chain> initial_elements(const FacePoset& fp, const Chain& x);

/// Direct product enumeration of flags xi_0 < ... < xi_n with xi_i a
/// rank-i face of x_i; independent of the refinement machinery.
std::vector<Chain> flag_oracle(const FacePoset& fp, const Chain& x);

/// Membership of a chain in the hypergraph built from a marked graded poset:
/// every chain componentwise below it (itself included) has a marked top.
/// Works for any finite marked graded poset. Throws std::invalid_argument if
/// `c` is not a chain of the poset.
bool membership(const MarkedGradedPoset& mp, const Chain& c);

/// Hypergraph on the poset's elements whose n-edges are the accepted
/// (n+1)-chains, for n up to `nmax` (default: the longest possible chain).
/// Throws std::invalid_argument when nothing is accepted.
Hypergraph hypergraph_from_marked_poset(const MarkedGradedPoset& mp,
                                        std::optional<int> nmax = std::nullopt);

/// Memoized membership test for the marked face poset (closure of h, h).
class MembershipOracle {
 public:
  MembershipOracle(const FacePoset& fp, std::vector<bool> marked);
  explicit MembershipOracle(const FacePoset& fp, const Hypergraph& h);

  [[nodiscard]] bool is_marked(ElementId e) const { return marked_[e]; }
  /// True iff c belongs to the subdivision.
  [[nodiscard]] bool contains(const Chain& c) const;

 private:
  const FacePoset* fp_;
  std::vector<bool> marked_;
};

struct SubdivisionOptions {
  /// Abort once more than this many edges have been produced.
  std::size_t edge_cap = 1'000'000;
};

/// sd(h): vertices are all simplices of the closure of h in (dim, lex) order,
/// labelled "[a,b,...]" from the base labels; edges are the accepted chains.
struct SubdivisionResult {
  Hypergraph hypergraph;
  std::vector<Simplex> provenance;  // new vertex -> source simplex
};

struct IteratedSubdivision {
  Hypergraph hypergraph;
  std::vector<std::vector<Simplex>> provenance;  // one entry per round
};

class EdgeCapExceeded : public std::runtime_error {
 public:
  EdgeCapExceeded(std::size_t cap, std::size_t rounds_completed,
                  std::optional<IteratedSubdivision> partial);

  std::size_t cap;
  std::size_t rounds_completed;
  /// Last fully completed result (the input itself when round one fails).
  std::optional<IteratedSubdivision> partial;
};

SubdivisionResult subdivide(const Hypergraph& h, const SubdivisionOptions& opts = {});

/// sd applied k times, re-interning vertices each round.
IteratedSubdivision iterate_subdivision(const Hypergraph& h, int k,
                                        const SubdivisionOptions& opts = {});

/// The induced map sd(source) -> sd(target), sigma -> phi(sigma). Throws
/// std::invalid_argument if `m` is not a morphism of hypergraphs.
VertexMap subdivide_morphism(const VertexMap& m);

}  // namespace hsd
