#include "hsd/chains.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hsd {

// -------------------------------------------------------- CoefficientRing --

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw std::invalid_argument("GF(" + std::to_string(p) + ") needs a prime below 2^32");
  return CoefficientRing(Kind::PrimeField, p);
}

CoefficientRing CoefficientRing::parse(std::string_view text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "z") return integers();
  if (s == "q") return rationals();
  std::string_view digits = s;
  if (digits.starts_with("gf")) {
    digits.remove_prefix(2);
    if (digits.starts_with("(") && digits.ends_with(")")) digits = digits.substr(1, digits.size() - 2);
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty())
      return prime_field(p);
  }
  throw std::invalid_argument("invalid ring '" + std::string(text) + "'; expected z, q or gf<p>");
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "GF" + std::to_string(p_);
  }
  return {};
}

// ------------------------------------------------------------ ChainComplex --

namespace {

IntMatrix over_ring(const IntMatrix& m, const CoefficientRing& ring) {
  return ring.kind() == CoefficientRing::Kind::PrimeField ? m.mod(ring.characteristic()) : m;
}

std::optional<std::size_t> first_column_difference(const IntMatrix& a, const IntMatrix& b,
                                                   const CoefficientRing& ring) {
  const IntMatrix x = over_ring(a, ring);
  const IntMatrix y = over_ring(b, ring);
  for (std::size_t j = 0; j < x.cols(); ++j)
    if (x.column(j) != y.column(j)) return j;
  return std::nullopt;
}

}  // namespace

std::size_t ChainComplex::size(int n) const {
  if (n < 0 || n > top_dim()) return 0;
  return sizes[static_cast<std::size_t>(n)];
}

IntMatrix ChainComplex::d(int n) const {
  if (n < 0 || n > top_dim()) return IntMatrix(size(n - 1), size(n));
  return boundary[static_cast<std::size_t>(n)];
}

std::optional<int> ChainComplex::square_failure() const {
  for (int n = 2; n <= top_dim(); ++n)
    if (!over_ring(d(n - 1) * d(n), ring).is_zero()) return n;
  return std::nullopt;
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& k, CoefficientRing ring) {
  ChainComplex c;
  c.ring = ring;
  for (int n = 0; n <= k.max_dim(); ++n) {
    auto cells = k.simplices(n);
    c.sizes.push_back(cells.size());
    IntMatrix d(n == 0 ? 0 : k.simplices(n - 1).size(), cells.size());
    if (n > 0) {
      for (std::size_t j = 0; j < cells.size(); ++j) {
        SparseVector<Integer> col;
        for (std::size_t i = 0; i < cells[j].size(); ++i)
          col.emplace_back(*k.index_in_dim(cells[j].face(i)), Integer(i % 2 ? -1 : 1));
        d.set_column(j, std::move(col));
      }
    }
    c.boundary.push_back(std::move(d));
  }
  return c;
}

// --------------------------------------------------------- EmbeddedComplex --

bool EmbeddedComplex::in_sub(int n, std::size_t cell) const {
  if (n < 0 || static_cast<std::size_t>(n) >= sub_basis.size()) return false;
  const auto& s = sub_basis[static_cast<std::size_t>(n)];
  return std::binary_search(s.begin(), s.end(), cell);
}

std::string EmbeddedComplex::cell_name(int n, std::size_t cell) const {
  if (n >= 0 && static_cast<std::size_t>(n) < cells.size() &&
      cell < cells[static_cast<std::size_t>(n)].size())
    return to_string(cells[static_cast<std::size_t>(n)][cell]);
  return "#" + std::to_string(cell);
}

EmbeddedComplex embedded_complex(const Hypergraph& h, const SimplicialComplex& k,
                                 CoefficientRing ring) {
  EmbeddedComplex e;
  e.ambient = simplicial_chain_complex(k, ring);
  for (int n = 0; n <= k.max_dim(); ++n) {
    auto cells = k.simplices(n);
    e.cells.emplace_back(cells.begin(), cells.end());
    std::vector<std::size_t> sub;
    for (const Simplex& s : h.edges(n)) {
      auto idx = k.index_in_dim(s);
      if (!idx) throw std::invalid_argument("edge " + to_string(s) + " is not in the ambient complex");
      sub.push_back(*idx);
    }
    std::sort(sub.begin(), sub.end());
    e.sub_basis.push_back(std::move(sub));
  }
  if (h.max_dim() > k.max_dim())
    throw std::invalid_argument("hypergraph has edges above the ambient dimension");
  return e;
}

EmbeddedComplex embedded_complex(const Hypergraph& h, CoefficientRing ring) {
  return embedded_complex(h, simplicial_closure(h), ring);
}

// ---------------------------------------------------------- InfimumComplex --

// Inf_n is the kernel of d_n restricted to D_n and followed by the projection
// onto the cells outside D_{n-1}.
InfimumComplex infimum_complex(const EmbeddedComplex& e) {
  const ChainComplex& c = e.ambient;
  const std::uint64_t p =
      c.ring.kind() == CoefficientRing::Kind::PrimeField ? c.ring.characteristic() : 0;
  InfimumComplex out;
  out.complex.ring = c.ring;
  for (int n = 0; n <= c.top_dim(); ++n) {
    const auto& sub = e.sub_basis[static_cast<std::size_t>(n)];
    std::vector<std::size_t> outside;
    for (std::size_t r = 0; r < c.size(n - 1); ++r)
      if (!e.in_sub(n - 1, r)) outside.push_back(r);
    const IntMatrix m = c.d(n).select_columns(sub).select_rows(outside);
    const IntMatrix k = p ? kernel_mod_p(m, p) : integer_kernel(m);
    IntMatrix basis(c.size(n), k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j) {
      SparseVector<Integer> col;
      for (const auto& [r, v] : k.column(j)) col.emplace_back(sub[r], v);
      basis.set_column(j, std::move(col));
    }
    out.complex.sizes.push_back(basis.cols());
    out.basis.push_back(std::move(basis));
  }
  for (int n = 0; n <= c.top_dim(); ++n) {
    const IntMatrix& b = out.basis[static_cast<std::size_t>(n)];
    if (n == 0) {
      out.complex.boundary.emplace_back(0, b.cols());
      continue;
    }
    const EchelonBasis below(out.basis[static_cast<std::size_t>(n - 1)], p);
    const IntMatrix dn = c.d(n);
    IntMatrix d(below.size(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto coords = below.coordinates(dn.apply(b.column(j)));
      if (!coords) throw std::logic_error("boundary of an infimum generator left the subcomplex");
      d.set_column(j, std::move(*coords));
    }
    out.complex.boundary.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------- homology --

std::vector<HomologyGroup> homology(const ChainComplex& c) {
  if (auto bad = c.square_failure())
    throw std::invalid_argument("not a chain complex: d o d != 0 at dimension " +
                                std::to_string(*bad));
  const int top = c.top_dim();
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::vector<Integer>> torsion(static_cast<std::size_t>(top + 1));
  for (int n = 1; n <= top; ++n) {
    const IntMatrix& d = c.boundary[static_cast<std::size_t>(n)];
    if (c.ring.kind() == CoefficientRing::Kind::PrimeField) {
      rank[static_cast<std::size_t>(n)] = rank_mod_p(d, c.ring.characteristic());
      continue;
    }
    auto inv = smith_invariants(d);
    rank[static_cast<std::size_t>(n)] = inv.size();
    if (c.ring.kind() == CoefficientRing::Kind::Integers)
      for (auto& x : inv)
        if (x > 1) torsion[static_cast<std::size_t>(n - 1)].push_back(std::move(x));
  }
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    out.push_back(HomologyGroup{n, c.size(n) - rank[un] - rank[un + 1], std::move(torsion[un])});
  }
  return out;
}

std::vector<HomologyGroup> embedded_homology(const Hypergraph& h, CoefficientRing ring) {
  return homology(infimum_complex(embedded_complex(h, ring)).complex);
}

// ------------------------------------------------------------ graded maps --

namespace {

void validate_shape(const GradedMap& f, const ChainComplex& source, const ChainComplex& target,
                    int degree) {
  if (f.degree != degree)
    throw std::invalid_argument("graded map has degree " + std::to_string(f.degree) +
                                ", expected " + std::to_string(degree));
  if (f.matrices.size() != source.sizes.size())
    throw std::invalid_argument("graded map has " + std::to_string(f.matrices.size()) +
                                " components for a complex of " +
                                std::to_string(source.sizes.size()) + " dimensions");
  for (int n = 0; n <= source.top_dim(); ++n) {
    const IntMatrix& m = f.matrices[static_cast<std::size_t>(n)];
    if (m.rows() != target.size(n + degree) || m.cols() != source.size(n))
      throw std::invalid_argument("graded map component " + std::to_string(n) +
                                  " has the wrong shape");
  }
}

std::string describe(const char* what, int n, const EmbeddedComplex* e, std::size_t cell) {
  return std::string(what) + " fails in dimension " + std::to_string(n) + " at cell " +
         (e ? e->cell_name(n, cell) : "#" + std::to_string(cell));
}

CheckResult chain_map_impl(const GradedMap& f, const ChainComplex& source,
                           const ChainComplex& target, const EmbeddedComplex* names) {
  validate_shape(f, source, target, 0);
  for (int n = 1; n <= source.top_dim(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    auto bad = first_column_difference(target.d(n) * f.matrices[un],
                                       f.matrices[un - 1] * source.d(n), target.ring);
    if (bad) return {false, describe("d f = f d", n, names, *bad)};
  }
  return {};
}

}  // namespace

CheckResult check_chain_map(const GradedMap& f, const ChainComplex& source,
                            const ChainComplex& target) {
  return chain_map_impl(f, source, target, nullptr);
}

CheckResult check_chain_map(const GradedMap& f, const EmbeddedComplex& source,
                            const EmbeddedComplex& target) {
  return chain_map_impl(f, source.ambient, target.ambient, &source);
}

CheckResult check_embedded_condition(const GradedMap& f, const EmbeddedComplex& source,
                                     const EmbeddedComplex& target) {
  validate_shape(f, source.ambient, target.ambient, f.degree);
  const CoefficientRing& ring = target.ambient.ring;
  for (int n = 0; n <= source.ambient.top_dim(); ++n) {
    const IntMatrix m = over_ring(f.matrices[static_cast<std::size_t>(n)], ring);
    for (std::size_t j : source.sub_basis[static_cast<std::size_t>(n)])
      for (const auto& [r, v] : m.column(j))
        if (!target.in_sub(n + f.degree, r))
          return {false, describe("embedded condition", n, &source, j) + " (image meets " +
                             target.cell_name(n + f.degree, r) + ")"};
  }
  return {};
}

CheckResult check_homotopy_identity(const GradedMap& f, const GradedMap& g, const GradedMap& h,
                                    const EmbeddedComplex& source, const EmbeddedComplex& target) {
  const ChainComplex& s = source.ambient;
  const ChainComplex& t = target.ambient;
  validate_shape(f, s, t, 0);
  validate_shape(g, s, t, 0);
  validate_shape(h, s, t, 1);
  for (int n = 0; n <= s.top_dim(); ++n) {
    const auto un = static_cast<std::size_t>(n);
    IntMatrix rhs = t.d(n + 1) * h.matrices[un];
    if (n > 0) rhs = rhs + h.matrices[un - 1] * s.d(n);
    auto bad = first_column_difference(f.matrices[un] - g.matrices[un], rhs, t.ring);
    if (bad) return {false, describe("f - g = dh + hd", n, &source, *bad)};
  }
  return {};
}

CheckResult check_homotopy(const GradedMap& f, const GradedMap& g, const GradedMap& h,
                           const EmbeddedComplex& source, const EmbeddedComplex& target) {
  if (auto r = check_homotopy_identity(f, g, h, source, target); !r) return r;
  return check_embedded_condition(h, source, target);
}

// ------------------------------------------------------ induced homology --

namespace {

template <class Ops>
SparseVector<typename Ops::value_type> to_field(const Ops& ops, const SparseVector<Integer>& v) {
  SparseVector<typename Ops::value_type> out;
  out.reserve(v.size());
  for (const auto& [r, x] : v) out.emplace_back(r, ops.from_integer(x));
  return normalize(ops, std::move(out));
}

template <class Ops>
SparseVector<typename Ops::value_type> apply_field(const Ops& ops, const IntMatrix& m,
                                                   const SparseVector<typename Ops::value_type>& v) {
  SparseVector<typename Ops::value_type> acc;
  for (const auto& [k, x] : v)
    for (const auto& [r, y] : m.column(k)) acc.emplace_back(r, ops.mul(x, ops.from_integer(y)));
  return normalize(ops, std::move(acc));
}

Rational to_rational(const Rational& x) { return x; }
Rational to_rational(std::uint64_t x) { return Rational(x); }

// Boundaries are inserted before cycles, so the cycles that survive as new
// pivots represent a basis of homology and any cycle decomposes uniquely.
template <class Ops>
struct HomologyBasis {
  FieldReducer<Ops> reducer;
  std::vector<std::size_t> slot;  // stored index -> generator ordinal, or npos
  std::vector<std::size_t> generators;

  HomologyBasis(const Ops& ops, const EmbeddedComplex& e, const InfimumComplex& inf, int n)
      : reducer(ops) {
    const ChainComplex& c = e.ambient;
    const auto un = static_cast<std::size_t>(n);
    if (n + 1 <= c.top_dim()) {
      const IntMatrix b = c.d(n + 1) * inf.basis[un + 1];
      for (std::size_t j = 0; j < b.cols(); ++j) add(to_field(ops, b.column(j)), false);
    }
    const IntMatrix& basis = inf.basis[un];
    const IntMatrix a = c.d(n) * basis;
    FieldReducer<Ops> kernel(ops, true);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto outcome = kernel.insert(to_field(ops, a.column(j)), j);
      if (outcome.independent) continue;
      SparseVector<typename Ops::value_type> cycle;
      for (const auto& [k, x] : outcome.transform)
        for (const auto& [r, y] : basis.column(k)) cycle.emplace_back(r, ops.mul(x, ops.from_integer(y)));
      add(normalize(ops, std::move(cycle)), true);
    }
  }

  void add(SparseVector<typename Ops::value_type> v, bool cycle) {
    if (!reducer.insert(std::move(v), reducer.size()).independent) return;
    slot.push_back(cycle ? generators.size() : std::size_t(-1));
    if (cycle) generators.push_back(reducer.size() - 1);
  }
};

template <class Ops>
std::vector<HomologyMatrix> induced_impl(const Ops& ops, const GradedMap& f,
                                         const EmbeddedComplex& source,
                                         const InfimumComplex& source_inf,
                                         const EmbeddedComplex& target,
                                         const InfimumComplex& target_inf) {
  std::vector<HomologyMatrix> out;
  for (int n = 0; n <= source.ambient.top_dim(); ++n) {
    HomologyBasis<Ops> src(ops, source, source_inf, n);
    HomologyMatrix hm;
    hm.dim = n;
    hm.cols = src.generators.size();
    if (n <= target.ambient.top_dim()) {
      HomologyBasis<Ops> tgt(ops, target, target_inf, n);
      hm.rows = tgt.generators.size();
      hm.entries.assign(hm.rows, std::vector<Rational>(hm.cols));
      for (std::size_t g = 0; g < src.generators.size(); ++g) {
        auto image = apply_field(ops, f.matrices[static_cast<std::size_t>(n)],
                                 src.reducer.stored(src.generators[g]));
        SparseVector<typename Ops::value_type> coeffs;
        if (!tgt.reducer.reduce(std::move(image), &coeffs).empty())
          throw std::logic_error("image of a cycle is not a cycle of the target");
        for (const auto& [k, x] : coeffs)
          if (tgt.slot[k] != std::size_t(-1)) hm.entries[tgt.slot[k]][g] = to_rational(x);
      }
    } else {
      hm.entries.clear();
    }
    out.push_back(std::move(hm));
  }
  return out;
}

}  // namespace

std::vector<HomologyMatrix> induced_map_on_homology(const GradedMap& f,
                                                    const EmbeddedComplex& source,
                                                    const InfimumComplex& source_inf,
                                                    const EmbeddedComplex& target,
                                                    const InfimumComplex& target_inf) {
  if (!(source.ambient.ring == target.ambient.ring))
    throw std::invalid_argument("source and target use different coefficient rings");
  if (auto r = chain_map_impl(f, source.ambient, target.ambient, &source); !r)
    throw std::invalid_argument("not a chain map: " + r.detail);
  if (auto r = check_embedded_condition(f, source, target); !r)
    throw std::invalid_argument("not an embedded map: " + r.detail);
  const CoefficientRing& ring = source.ambient.ring;
  if (ring.kind() == CoefficientRing::Kind::PrimeField)
    return induced_impl(ModPOps{ring.characteristic()}, f, source, source_inf, target, target_inf);
  return induced_impl(RationalOps{}, f, source, source_inf, target, target_inf);
}

std::vector<HomologyMatrix> induced_map_on_homology(const GradedMap& f,
                                                    const EmbeddedComplex& source,
                                                    const EmbeddedComplex& target) {
  return induced_map_on_homology(f, source, infimum_complex(source), target,
                                 infimum_complex(target));
}

bool is_isomorphism(const HomologyMatrix& m, const CoefficientRing& ring) {
  if (m.rows != m.cols) return false;
  auto full_rank = [&](const auto& ops) {
    FieldReducer<std::decay_t<decltype(ops)>> red(ops);
    for (std::size_t j = 0; j < m.cols; ++j) {
      SparseVector<typename std::decay_t<decltype(ops)>::value_type> col;
      for (std::size_t i = 0; i < m.rows; ++i) {
        if (m.entries[i][j].is_zero()) continue;
        if constexpr (std::is_same_v<std::decay_t<decltype(ops)>, ModPOps>)
          col.emplace_back(i, ops.from_integer(numerator(m.entries[i][j])));
        else
          col.emplace_back(i, m.entries[i][j]);
      }
      if (!red.insert(normalize(ops, std::move(col)), j).independent) return false;
    }
    return true;
  };
  if (ring.kind() == CoefficientRing::Kind::PrimeField)
    return full_rank(ModPOps{ring.characteristic()});
  return full_rank(RationalOps{});
}

}  // namespace hsd
