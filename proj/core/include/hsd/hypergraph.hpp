#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hsd {

using VertexId = std::uint32_t;

/// A nonempty finite vertex set, stored as a strictly increasing index list.
///
/// Simplices compare by (dimension, lexicographic vertex list); sorting a
/// collection of simplices therefore yields the canonical basis order used by
/// every chain complex in the library.
class Simplex {
 public:
  /// Sorts and deduplicates `vertices`. Throws std::invalid_argument if empty.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices)
      : Simplex(std::vector<VertexId>(vertices)) {}

  /// Takes ownership of an already strictly increasing, nonempty list.
  static Simplex from_sorted(std::vector<VertexId> vertices);

  [[nodiscard]] std::span<const VertexId> vertices() const { return vertices_; }
  [[nodiscard]] std::size_t size() const { return vertices_.size(); }
  [[nodiscard]] int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  [[nodiscard]] VertexId operator[](std::size_t i) const { return vertices_[i]; }
  [[nodiscard]] VertexId front() const { return vertices_.front(); }
  /// Largest vertex in the fixed total order.
  [[nodiscard]] VertexId last() const { return vertices_.back(); }

  [[nodiscard]] bool contains(VertexId v) const;
  /// Subset test (not necessarily proper).
  [[nodiscard]] bool is_face_of(const Simplex& other) const;

  /// The face obtained by deleting the i-th vertex. Requires dim() >= 1.
  [[nodiscard]] Simplex face(std::size_t i) const;
  /// All codimension-one faces, face(0) ... face(dim()).
  [[nodiscard]] std::vector<Simplex> facets() const;
  /// All nonempty subsets, in (dim, lex) order. Includes the simplex itself.
  [[nodiscard]] std::vector<Simplex> all_faces() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

 private:
  Simplex() = default;
  std::vector<VertexId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

std::string to_string(const Simplex& s);

/// Interned vertex labels. Index order is the fixed total vertex order.
class VertexTable {
 public:
  VertexTable() = default;
  /// Throws std::invalid_argument on duplicate labels.
  explicit VertexTable(std::vector<std::string> labels);
  /// Labels "0", "1", ..., "n-1".
  static VertexTable numbered(std::size_t n);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::string& label(VertexId v) const { return labels_.at(v); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::optional<VertexId> find(const std::string& label) const;

  friend bool operator==(const VertexTable& a, const VertexTable& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
};

/// A nonempty family of hyperedges over a vertex table, bucketed by
/// dimension with each bucket in lexicographic order.
class Hypergraph {
 public:
  /// Throws std::invalid_argument if `edges` is empty, contains duplicates,
  /// or references a vertex outside the table.
  Hypergraph(VertexTable vertices, std::vector<Simplex> edges);

  [[nodiscard]] const VertexTable& vertices() const { return vertices_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] int max_dim() const { return static_cast<int>(buckets_.size()) - 1; }
  /// Edges of dimension `dim` in lexicographic order (empty span if none).
  [[nodiscard]] std::span<const Simplex> edges(int dim) const;
  /// All edges in (dim, lex) order.
  [[nodiscard]] std::vector<Simplex> all_edges() const;
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] std::size_t edge_count(int dim) const { return edges(dim).size(); }
  [[nodiscard]] bool contains(const Simplex& s) const;
  /// Position of `s` within its dimension bucket.
  [[nodiscard]] std::optional<std::size_t> index_in_dim(const Simplex& s) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertices_ == b.vertices_ && a.buckets_ == b.buckets_;
  }

 private:
  VertexTable vertices_;
  std::vector<std::vector<Simplex>> buckets_;
  std::size_t edge_count_ = 0;
};

/// A hypergraph that is closed under taking nonempty subsets.
class SimplicialComplex {
 public:
  /// Throws std::invalid_argument if `h` is not downward closed.
  explicit SimplicialComplex(Hypergraph h);

  [[nodiscard]] const Hypergraph& hypergraph() const { return h_; }
  [[nodiscard]] const VertexTable& vertices() const { return h_.vertices(); }
  [[nodiscard]] int max_dim() const { return h_.max_dim(); }
  [[nodiscard]] std::span<const Simplex> simplices(int dim) const { return h_.edges(dim); }
  [[nodiscard]] std::size_t simplex_count() const { return h_.edge_count(); }
  [[nodiscard]] std::size_t simplex_count(int dim) const { return h_.edge_count(dim); }
  [[nodiscard]] bool contains(const Simplex& s) const { return h_.contains(s); }
  [[nodiscard]] std::optional<std::size_t> index_in_dim(const Simplex& s) const {
    return h_.index_in_dim(s);
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.h_ == b.h_;
  }

 private:
  struct Trusted {};
  SimplicialComplex(Hypergraph h, Trusted) : h_(std::move(h)) {}
  friend SimplicialComplex simplicial_closure(const Hypergraph& h);

  Hypergraph h_;
};

/// All nonempty subsets of edges of `h`: the smallest complex containing it.
SimplicialComplex simplicial_closure(const Hypergraph& h);

bool is_simplicial_complex(const Hypergraph& h);

/// Global (dim, lex) numbering of every simplex of a complex.
class SimplexIndex {
 public:
  explicit SimplexIndex(const SimplicialComplex& k);

  [[nodiscard]] std::size_t size() const { return simplices_.size(); }
  [[nodiscard]] const Simplex& at(std::size_t id) const { return simplices_.at(id); }
  [[nodiscard]] const std::vector<Simplex>& simplices() const { return simplices_; }
  [[nodiscard]] std::optional<std::size_t> find(const Simplex& s) const;
  /// First global id of dimension `dim`.
  [[nodiscard]] std::size_t offset(int dim) const;

 private:
  std::vector<Simplex> simplices_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> lookup_;
};

/// A total function on the source vertex table. It is a morphism of
/// hypergraphs when the set-image of every source edge is a target edge.
class VertexMap {
 public:
  /// Throws std::invalid_argument unless `map` has one in-range entry per
  /// source vertex.
  VertexMap(Hypergraph source, Hypergraph target, std::vector<VertexId> map);

  static VertexMap identity(const Hypergraph& h);

  [[nodiscard]] const Hypergraph& source() const { return source_; }
  [[nodiscard]] const Hypergraph& target() const { return target_; }
  [[nodiscard]] const std::vector<VertexId>& map() const { return map_; }
  [[nodiscard]] VertexId operator()(VertexId v) const { return map_.at(v); }

  /// Set-image; duplicates collapse so the dimension may drop.
  [[nodiscard]] Simplex image(const Simplex& s) const;
  [[nodiscard]] bool is_morphism() const;

 private:
  Hypergraph source_;
  Hypergraph target_;
  std::vector<VertexId> map_;
};

/// g after f. Throws std::invalid_argument if f's target differs from g's source.
VertexMap compose(const VertexMap& g, const VertexMap& f);

/// Image hypergraph of `h` (whose edges use the source vertex table) over the
/// target vertex table. Throws std::invalid_argument if an image edge is not
/// an edge of the map's target.
Hypergraph apply_morphism(const VertexMap& m, const Hypergraph& h);

}  // namespace hsd
