#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hsd/chains.hpp"
#include "hsd/hypergraph.hpp"
#include "hsd/invariance.hpp"
#include "hsd/subdivision.hpp"

namespace hsd {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads {"vertices": [...], "edges": [[...], ...]}. Indices inside an edge
/// are sorted and deduplicated; empty edges, out-of-range indices and
/// duplicate edges raise ParseError naming the offending edge index.
Hypergraph parse_hypergraph(std::string_view text);

/// Compact JSON with edges in (dim, lex) order, newline terminated.
std::string hypergraph_to_json(const Hypergraph& h);
/// As hypergraph_to_json plus a "provenance" array: entry v lists the base
/// vertex indices of the simplex that vertex v stands for.
std::string subdivision_to_json(const Hypergraph& h, const std::vector<Simplex>& provenance);
/// As hypergraph_to_json plus "provenance": one array per round, entry v of
/// round r naming the round r-1 vertices behind vertex v.
std::string subdivision_to_json(const IteratedSubdivision& s);

std::string homology_to_json(const CoefficientRing& ring, const std::vector<HomologyGroup>& groups);
std::string report_to_json(const InvarianceReport& report);

}  // namespace hsd
