#include "fixtures.hpp"

#include <algorithm>

#include "hsd/random.hpp"

namespace hsd::fixtures {

Hypergraph worked_example() {
  return Hypergraph(VertexTable::numbered(3), {{0}, {1}, {0, 1}, {1, 2}, {0, 1, 2}});
}

Hypergraph bare_triangle() {
  return Hypergraph(VertexTable::numbered(3), {{0}, {1}, {2}, {0, 1, 2}});
}

Hypergraph hollow_triangle() {
  return Hypergraph(VertexTable::numbered(3), {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
}

Hypergraph full_simplex(std::size_t n) {
  std::vector<VertexId> all(n + 1);
  for (std::size_t i = 0; i <= n; ++i) all[i] = static_cast<VertexId>(i);
  return simplicial_closure(Hypergraph(VertexTable::numbered(n + 1), {Simplex(all)})).hypergraph();
}

std::vector<Hypergraph> random_corpus(std::size_t count, std::uint64_t seed,
                                      std::size_t max_vertices, std::size_t max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t v = 1 + uniform_below(rng, max_vertices);
    const std::uint64_t subsets = (std::uint64_t{1} << v) - 1;
    const std::size_t m = 1 + uniform_below(rng, std::min<std::uint64_t>(max_edges, subsets));
    out.push_back(random_hypergraph({v, m, rng()}));
  }
  return out;
}

std::vector<SimplicialComplex> random_complexes(std::size_t count, std::uint64_t seed,
                                                std::size_t max_vertices) {
  std::vector<SimplicialComplex> out;
  for (const Hypergraph& h : random_corpus(count, seed, max_vertices, 8))
    out.push_back(simplicial_closure(h));
  return out;
}

std::vector<AmbientPair> random_ambient_pairs(std::size_t count, std::uint64_t seed,
                                              std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  std::vector<AmbientPair> out;
  while (out.size() < count) {
    const std::size_t v = 2 + uniform_below(rng, max_vertices - 1);
    const std::uint64_t subsets = (std::uint64_t{1} << v) - 1;
    const std::size_t m = 1 + uniform_below(rng, std::min<std::uint64_t>(12, subsets));
    Hypergraph h = random_hypergraph({v, m, rng(), false, true});
    SimplicialComplex closure = simplicial_closure(h);

    std::vector<Simplex> extra = closure.hypergraph().all_edges();
    const std::size_t additions = 1 + uniform_below(rng, 3);
    for (std::size_t a = 0; a < additions; ++a) {
      std::vector<VertexId> ids;
      const std::uint64_t mask = 1 + uniform_below(rng, subsets);
      for (std::size_t i = 0; i < v; ++i)
        if (mask >> i & 1U) ids.push_back(static_cast<VertexId>(i));
      Simplex s = Simplex::from_sorted(std::move(ids));
      if (std::find(extra.begin(), extra.end(), s) == extra.end()) extra.push_back(std::move(s));
    }
    SimplicialComplex ambient =
        simplicial_closure(Hypergraph(VertexTable::numbered(v), std::move(extra)));
    if (ambient.simplex_count() == closure.simplex_count()) continue;
    out.push_back({std::move(h), std::move(ambient)});
  }
  return out;
}

std::string data_path(const std::string& name) { return std::string(HSD_TEST_DATA_DIR) + "/" + name; }

}  // namespace hsd::fixtures
