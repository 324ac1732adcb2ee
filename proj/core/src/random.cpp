#include "hsd/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hsd {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

namespace {

std::uint64_t random_mask(std::mt19937_64& rng, std::size_t v, bool dimension_weighted) {
  if (!dimension_weighted) return 1 + uniform_below(rng, (std::uint64_t{1} << v) - 1);
  const std::size_t k = 1 + uniform_below(rng, v);
  std::vector<std::size_t> pool(v);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_below(rng, v - i);
    std::swap(pool[i], pool[j]);
    mask |= std::uint64_t{1} << pool[i];
  }
  return mask;
}

}  // namespace

Hypergraph random_hypergraph(const RandomHypergraphOptions& opts) {
  const std::size_t v = opts.vertices;
  if (v == 0 || opts.edges == 0)
    throw std::invalid_argument("vertex and edge counts must be positive");
  if (v > 62) throw std::invalid_argument("at most 62 vertices are supported");
  const std::uint64_t available = (std::uint64_t{1} << v) - 1;
  if (opts.edges > available)
    throw std::invalid_argument(std::to_string(opts.edges) + " edges requested but only " +
                                std::to_string(available) + " nonempty subsets of " +
                                std::to_string(v) + " vertices exist");

  std::mt19937_64 rng(opts.seed);
  std::vector<std::uint64_t> masks;
  if (2 * opts.edges > available && !opts.dimension_weighted) {
    std::vector<std::uint64_t> all(available);
    std::iota(all.begin(), all.end(), std::uint64_t{1});
    for (std::size_t i = 0; i < opts.edges; ++i) {
      std::swap(all[i], all[i + uniform_below(rng, available - i)]);
      masks.push_back(all[i]);
    }
  } else {
    std::set<std::uint64_t> seen;
    while (masks.size() < opts.edges) {
      const std::uint64_t m = random_mask(rng, v, opts.dimension_weighted);
      if (seen.insert(m).second) masks.push_back(m);
    }
  }

  std::uint64_t used = 0;
  for (std::uint64_t m : masks) used |= m;
  std::vector<VertexId> renumber(v);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < v; ++i)
    if (opts.allow_isolated || (used >> i & 1U)) renumber[i] = static_cast<VertexId>(kept++);

  std::vector<Simplex> edges;
  for (std::uint64_t m : masks) {
    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < v; ++i)
      if (m >> i & 1U) ids.push_back(renumber[i]);
    edges.push_back(Simplex::from_sorted(std::move(ids)));
  }
  return Hypergraph(VertexTable::numbered(kept), std::move(edges));
}

}  // namespace hsd
