#pragma once

#include <string>
#include <vector>

#include "hsd/chains.hpp"
#include "hsd/subdivision.hpp"

namespace hsd {

/// A hypergraph and its subdivision as embedded complexes:
/// source = (D(h), C(closure h)), target = (D(sd h), C(sd closure h)).
/// Target vertex ids are the source simplex ids in (dim, lex) order.
struct SubdivisionPair {
  Hypergraph hypergraph;
  SubdivisionResult subdivided;
  SimplicialComplex closure;
  SimplicialComplex subdivided_closure;
  EmbeddedComplex source;
  EmbeddedComplex target;
};

/// Throws std::logic_error if sd(h) and sd(closure h) intern vertices
/// differently.
SubdivisionPair subdivision_pair(const Hypergraph& h, CoefficientRing ring);

/// Sends a k-simplex to the signed sum of the (k+1)! flags obtained by
/// deleting one vertex at a time.
GradedMap rho(const SubdivisionPair& p);
/// Sends a flag to the simplex of its components' last vertices, or to zero
/// when two of them coincide.
GradedMap pi(const SubdivisionPair& p);
/// Degree-one map on the subdivided side with dh + hd = id - rho pi.
GradedMap homotopy_h(const SubdivisionPair& p);

struct NamedCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct InvarianceReport {
  CoefficientRing ring = CoefficientRing::integers();
  std::vector<NamedCheck> checks;
  std::vector<HomologyGroup> source_homology;
  std::vector<HomologyGroup> subdivided_homology;
  std::vector<HomologyMatrix> induced;

  [[nodiscard]] bool all_pass() const;
};

/// Runs, in order: chain map checks for rho and pi, embedded conditions for
/// rho, pi and h, pi rho = id, dh + hd = id - rho pi, and the homology
/// isomorphism induced by rho. Failures are report entries, not exceptions.
InvarianceReport verify_invariance(const Hypergraph& h, CoefficientRing ring);

}  // namespace hsd
