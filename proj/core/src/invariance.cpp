#include "hsd/invariance.hpp"

#include <algorithm>

namespace hsd {

namespace {

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// Calls emit(word, faces) for every index word k_1..k_n with 0 <= k_t <= n+1-t,
// where faces[t] is sigma with vertices k_1, ..., k_t deleted in turn.
template <class Emit>
void for_each_deletion_word(const Simplex& sigma, Emit&& emit) {
  const std::size_t n = static_cast<std::size_t>(sigma.dim());
  std::vector<std::size_t> word;
  std::vector<Simplex> faces{sigma};
  auto walk = [&](auto&& self) -> void {
    if (word.size() == n) {
      emit(word, faces);
      return;
    }
    const Simplex cur = faces.back();
    for (std::size_t k = 0; k < cur.size(); ++k) {
      word.push_back(k);
      faces.push_back(cur.face(k));
      self(self);
      faces.pop_back();
      word.pop_back();
    }
  };
  walk(walk);
}

// Row of the sd cell spelled by the given source simplex ids (any order).
std::size_t sd_row(const SubdivisionPair& p, std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  const Simplex cell = Simplex::from_sorted(std::move(ids));
  auto idx = p.subdivided_closure.index_in_dim(cell);
  if (!idx) throw std::logic_error("chain " + to_string(cell) + " is not a cell of the subdivision");
  return *idx;
}

VertexId vertex_of(const SimplexIndex& index, const Simplex& s) {
  return static_cast<VertexId>(*index.find(s));
}

// Simplex of last vertices of the components chain[0..i], if they differ.
std::optional<Simplex> last_vertices(const SubdivisionPair& p, const Simplex& chain, std::size_t i) {
  std::vector<VertexId> out;
  for (std::size_t t = 0; t <= i; ++t) {
    const VertexId v = p.subdivided.provenance[chain[t]].last();
    if (!out.empty() && out.back() == v) return std::nullopt;
    out.push_back(v);
  }
  return Simplex::from_sorted(std::move(out));
}

}  // namespace

SubdivisionPair subdivision_pair(const Hypergraph& h, CoefficientRing ring) {
  SubdivisionResult sd = subdivide(h);
  SimplicialComplex closure = simplicial_closure(h);
  SubdivisionResult sd_closure = subdivide(closure.hypergraph());
  if (sd.provenance != sd_closure.provenance)
    throw std::logic_error("subdivisions of h and of its closure intern vertices differently");
  SimplicialComplex sd_complex(sd_closure.hypergraph);
  EmbeddedComplex source = embedded_complex(h, closure, ring);
  EmbeddedComplex target = embedded_complex(sd.hypergraph, sd_complex, ring);
  return SubdivisionPair{h,
                         std::move(sd),
                         std::move(closure),
                         std::move(sd_complex),
                         std::move(source),
                         std::move(target)};
}

GradedMap rho(const SubdivisionPair& p) {
  const SimplexIndex index(p.closure);
  GradedMap f;
  for (int n = 0; n <= p.source.ambient.top_dim(); ++n) {
    const auto& cells = p.source.cells[static_cast<std::size_t>(n)];
    IntMatrix m(p.target.ambient.size(n), cells.size());
    const long long offset = static_cast<long long>(n) * (n + 1) / 2;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      SparseVector<Integer> col;
      for_each_deletion_word(cells[j], [&](const std::vector<std::size_t>& word,
                                           const std::vector<Simplex>& faces) {
        long long sum = 0;
        for (std::size_t k : word) sum += static_cast<long long>(k);
        std::vector<VertexId> ids;
        for (const Simplex& s : faces) ids.push_back(vertex_of(index, s));
        col.emplace_back(sd_row(p, std::move(ids)), Integer(parity_sign(sum - offset)));
      });
      m.set_column(j, std::move(col));
    }
    f.matrices.push_back(std::move(m));
  }
  return f;
}

GradedMap pi(const SubdivisionPair& p) {
  GradedMap f;
  for (int n = 0; n <= p.target.ambient.top_dim(); ++n) {
    const auto& cells = p.target.cells[static_cast<std::size_t>(n)];
    IntMatrix m(p.source.ambient.size(n), cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
      auto tau = last_vertices(p, cells[j], cells[j].size() - 1);
      if (!tau) continue;
      m.set_column(j, {{*p.closure.index_in_dim(*tau), Integer(1)}});
    }
    f.matrices.push_back(std::move(m));
  }
  return f;
}

GradedMap homotopy_h(const SubdivisionPair& p) {
  const SimplexIndex index(p.closure);
  GradedMap f;
  f.degree = 1;
  for (int n = 0; n <= p.target.ambient.top_dim(); ++n) {
    const auto& cells = p.target.cells[static_cast<std::size_t>(n)];
    IntMatrix m(p.target.ambient.size(n + 1), cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const Simplex& chain = cells[j];
      SparseVector<Integer> col;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        auto tau = last_vertices(p, chain, i);
        if (!tau || *tau == p.subdivided.provenance[chain[i]]) continue;
        const long long offset = static_cast<long long>(i) * (i + 1) / 2;
        for_each_deletion_word(*tau, [&](const std::vector<std::size_t>& word,
                                         const std::vector<Simplex>& faces) {
          long long sum = static_cast<long long>(i);
          for (std::size_t k : word) sum += static_cast<long long>(k);
          std::vector<VertexId> ids;
          for (const Simplex& s : faces) ids.push_back(vertex_of(index, s));
          for (std::size_t t = i; t < chain.size(); ++t) ids.push_back(chain[t]);
          col.emplace_back(sd_row(p, std::move(ids)), Integer(parity_sign(sum - offset)));
        });
      }
      m.set_column(j, std::move(col));
    }
    f.matrices.push_back(std::move(m));
  }
  return f;
}

bool InvarianceReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

namespace {

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  GradedMap out;
  out.degree = f.degree + g.degree;
  for (std::size_t n = 0; n < f.matrices.size(); ++n)
    out.matrices.push_back(g.matrices.at(n + static_cast<std::size_t>(f.degree)) * f.matrices[n]);
  return out;
}

GradedMap identity_map(const ChainComplex& c) {
  GradedMap out;
  for (std::size_t s : c.sizes) out.matrices.push_back(IntMatrix::identity(s));
  return out;
}

std::string describe_groups(const std::vector<HomologyGroup>& a,
                            const std::vector<HomologyGroup>& b) {
  for (std::size_t n = 0; n < std::max(a.size(), b.size()); ++n) {
    const HomologyGroup empty{static_cast<int>(n), 0, {}};
    const HomologyGroup& x = n < a.size() ? a[n] : empty;
    const HomologyGroup& y = n < b.size() ? b[n] : empty;
    if (x == y) continue;
    return "dimension " + std::to_string(n) + ": rank " + std::to_string(x.rank) + " vs " +
           std::to_string(y.rank) + ", torsion " + std::to_string(x.torsion.size()) + " vs " +
           std::to_string(y.torsion.size()) + " factors";
  }
  return {};
}

}  // namespace

InvarianceReport verify_invariance(const Hypergraph& h, CoefficientRing ring) {
  InvarianceReport report;
  report.ring = ring;
  const SubdivisionPair p = subdivision_pair(h, ring);
  const GradedMap r = rho(p);
  const GradedMap q = pi(p);
  const GradedMap hh = homotopy_h(p);
  auto add = [&](std::string name, const CheckResult& c) {
    report.checks.push_back(NamedCheck{std::move(name), c.pass, c.detail});
  };

  add("rho_chain_map", check_chain_map(r, p.source, p.target));
  add("pi_chain_map", check_chain_map(q, p.target, p.source));
  add("rho_embedded", check_embedded_condition(r, p.source, p.target));
  add("pi_embedded", check_embedded_condition(q, p.target, p.source));
  add("h_embedded", check_embedded_condition(hh, p.target, p.target));

  const GradedMap pr = compose(q, r);
  CheckResult identity;
  const GradedMap id_source = identity_map(p.source.ambient);
  for (std::size_t n = 0; n < pr.matrices.size() && identity.pass; ++n) {
    IntMatrix diff = pr.matrices[n] - id_source.matrices[n];
    if (ring.kind() == CoefficientRing::Kind::PrimeField) diff = diff.mod(ring.characteristic());
    for (std::size_t j = 0; j < diff.cols(); ++j)
      if (!diff.column(j).empty()) {
        identity = {false, "pi rho differs from the identity in dimension " + std::to_string(n) +
                               " at cell " + p.source.cell_name(static_cast<int>(n), j)};
        break;
      }
  }
  add("pi_rho_identity", identity);
  add("homotopy_identity",
      check_homotopy_identity(identity_map(p.target.ambient), compose(r, q), hh, p.target,
                              p.target));

  const InfimumComplex source_inf = infimum_complex(p.source);
  const InfimumComplex target_inf = infimum_complex(p.target);
  report.source_homology = homology(source_inf.complex);
  report.subdivided_homology = homology(target_inf.complex);
  CheckResult iso;
  if (report.source_homology != report.subdivided_homology) {
    iso = {false, "homology groups differ, " +
                      describe_groups(report.source_homology, report.subdivided_homology)};
  } else if (report.checks[0].pass && report.checks[2].pass) {
    report.induced = induced_map_on_homology(r, p.source, source_inf, p.target, target_inf);
    const CoefficientRing field =
        ring.kind() == CoefficientRing::Kind::PrimeField ? ring : CoefficientRing::rationals();
    for (const HomologyMatrix& m : report.induced)
      if (!is_isomorphism(m, field)) {
        iso = {false, "induced map is not invertible in dimension " + std::to_string(m.dim)};
        break;
      }
  } else {
    iso = {false, "rho is not a morphism of embedded complexes"};
  }
  add("homology_isomorphism", iso);
  return report;
}

}  // namespace hsd
