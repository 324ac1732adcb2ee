#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hsd/hypergraph.hpp"

namespace hsd {

using ElementId = std::uint32_t;
/// Sorted, duplicate-free list of poset elements.
using ElementSet = std::vector<ElementId>;

/// Finite graded poset stored as its Hasse diagram, with the order relation
/// answered from a reachability table built once at construction.
class GradedPoset {
 public:
  /// `covers` holds (lower, upper) pairs. Throws std::invalid_argument if a
  /// cover does not raise the rank by exactly one or an id is out of range.
  GradedPoset(std::vector<int> ranks, std::vector<std::pair<ElementId, ElementId>> covers,
              std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t size() const { return ranks_.size(); }
  [[nodiscard]] int rank(ElementId e) const { return ranks_.at(e); }
  [[nodiscard]] int max_rank() const { return max_rank_; }
  /// Elements covered by `e`.
  [[nodiscard]] std::span<const ElementId> lower_covers(ElementId e) const { return down_.at(e); }
  /// Elements covering `e`.
  [[nodiscard]] std::span<const ElementId> upper_covers(ElementId e) const { return up_.at(e); }
  [[nodiscard]] bool leq(ElementId a, ElementId b) const;
  [[nodiscard]] bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  /// True when every minimal element has rank 0, so ranks count cover steps.
  [[nodiscard]] bool rank_starts_at_zero() const { return zero_based_; }
  [[nodiscard]] std::string label(ElementId e) const;

 private:
  std::vector<int> ranks_;
  std::vector<std::vector<ElementId>> down_;
  std::vector<std::vector<ElementId>> up_;
  std::vector<std::vector<std::uint64_t>> reach_;  // reach_[b] has bit a iff a <= b
  std::vector<std::string> labels_;
  int max_rank_ = -1;
  bool zero_based_ = true;
};

/// A graded poset with a distinguished (marked) subset.
struct MarkedGradedPoset {
  GradedPoset poset;
  std::vector<bool> marked;

  MarkedGradedPoset(GradedPoset p, std::vector<bool> marks);
  [[nodiscard]] bool is_marked(ElementId e) const { return marked.at(e); }
};

/// A nonempty strictly increasing sequence x0 < x1 < ... < xn.
class Chain {
 public:
  explicit Chain(std::vector<ElementId> parts);
  Chain(std::initializer_list<ElementId> parts) : Chain(std::vector<ElementId>(parts)) {}

  [[nodiscard]] std::span<const ElementId> parts() const { return parts_; }
  [[nodiscard]] const std::vector<ElementId>& vec() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] ElementId operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] ElementId top() const { return parts_.back(); }

  [[nodiscard]] Chain with_part(std::size_t i, ElementId e) const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;

 private:
  std::vector<ElementId> parts_;
};

struct ChainHash {
  std::size_t operator()(const Chain& c) const noexcept;
};

/// True iff the parts of `c` are valid and strictly increasing in `p`.
bool is_chain_in(const GradedPoset& p, const Chain& c);

ElementSet covered_by(const GradedPoset& p, const ElementSet& ys);
ElementSet strictly_below(const GradedPoset& p, const ElementSet& ys);
/// Minimal elements of strictly_below(p, ys).
ElementSet initial_below(const GradedPoset& p, const ElementSet& ys);

/// Face poset of a complex; element ids follow SimplexIndex (dim, lex) order
/// and labels are the simplices' vertex lists.
GradedPoset face_poset(const SimplicialComplex& k);
/// (face poset of the closure, edges of h).
MarkedGradedPoset marked_face_poset(const Hypergraph& h);

/// All chains of length n + 1 whose top element is marked, sorted.
std::vector<Chain> chains_with_marked_top(const MarkedGradedPoset& mp, int n);

/// True iff `c` is an initial element of the chain poset whose top is marked.
/// Throws std::invalid_argument if `c` is not a chain of the poset.
bool is_S_successive(const MarkedGradedPoset& mp, const Chain& c);

/// True iff no chain of the same length lies strictly below `c` componentwise.
bool is_initial_chain(const GradedPoset& p, const Chain& c);

/// Simplicial complex of all strict chains. Vertex i is element i (labelled
/// with the poset label).
SimplicialComplex order_complex(const GradedPoset& p);

/// An element function between marked graded posets.
class PosetMap {
 public:
  /// Throws std::invalid_argument unless the map is order preserving, sends
  /// marked elements to marked elements and satisfies the graded bound
  /// rank(f(y)) <= rank(f(x)) + 1 whenever y covers x.
  PosetMap(const MarkedGradedPoset& source, const MarkedGradedPoset& target,
           std::vector<ElementId> map);
  PosetMap(MarkedGradedPoset&&, const MarkedGradedPoset&, std::vector<ElementId>) = delete;
  PosetMap(const MarkedGradedPoset&, MarkedGradedPoset&&, std::vector<ElementId>) = delete;

  [[nodiscard]] const MarkedGradedPoset& source() const { return *source_; }
  [[nodiscard]] const MarkedGradedPoset& target() const { return *target_; }
  [[nodiscard]] ElementId operator()(ElementId e) const { return map_.at(e); }

 private:
  const MarkedGradedPoset* source_;
  const MarkedGradedPoset* target_;
  std::vector<ElementId> map_;
};

/// Checks that every element covered by f(x) is the image of an element
/// covered by x.
bool is_compatible(const PosetMap& m);

/// Elementwise map between marked face posets induced by a hypergraph
/// morphism; `source`/`target` must be marked_face_poset of its ends.
std::vector<ElementId> induced_face_map(const VertexMap& m);

/// Hasse diagram in Graphviz DOT syntax, marked elements drawn as boxes.
std::string to_dot(const MarkedGradedPoset& mp);

}  // namespace hsd
