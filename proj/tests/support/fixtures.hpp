#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsd/hypergraph.hpp"

namespace hsd::fixtures {

/// {{0},{1},{0,1},{1,2},{0,1,2}} on vertices 0, 1, 2.
Hypergraph worked_example();
/// {{0},{1},{2},{0,1,2}}: a hyperedge none of whose 1-faces are edges.
Hypergraph bare_triangle();
/// Boundary of a triangle.
Hypergraph hollow_triangle();
/// The full simplex on n + 1 vertices as a complex.
Hypergraph full_simplex(std::size_t n);

/// Seeded hypergraphs with v uniform in 1..max_vertices and m uniform in
/// 1..min(max_edges, 2^v - 1).
std::vector<Hypergraph> random_corpus(std::size_t count, std::uint64_t seed,
                                      std::size_t max_vertices = 6, std::size_t max_edges = 20);

/// Closures of seeded random hypergraphs.
std::vector<SimplicialComplex> random_complexes(std::size_t count, std::uint64_t seed,
                                                std::size_t max_vertices = 6);

struct AmbientPair {
  Hypergraph hypergraph;
  SimplicialComplex ambient;  // strictly contains the closure of hypergraph
};

/// Random hypergraphs with an ambient complex obtained by adding at least
/// one simplex outside the closure.
std::vector<AmbientPair> random_ambient_pairs(std::size_t count, std::uint64_t seed,
                                              std::size_t max_vertices = 6);

std::string data_path(const std::string& name);

}  // namespace hsd::fixtures
