#pragma once

#include <cstdint>
#include <random>

#include "hsd/hypergraph.hpp"

namespace hsd {

/// Uniform draw from [0, n) by rejection, identical on every platform
/// (std::uniform_int_distribution is implementation defined).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

struct RandomHypergraphOptions {
  std::size_t vertices = 1;
  std::size_t edges = 1;
  std::uint64_t seed = 0;
  /// Pick the edge size uniformly first instead of a uniform nonempty subset.
  bool dimension_weighted = false;
  /// Keep vertices that no edge uses; otherwise they are dropped and the
  /// remaining vertices renumbered in order.
  bool allow_isolated = false;
};

/// m distinct nonempty subsets of {0, ..., v-1}. Throws std::invalid_argument
/// if v or m is zero, v > 62, or m > 2^v - 1.
Hypergraph random_hypergraph(const RandomHypergraphOptions& opts);

}  // namespace hsd
