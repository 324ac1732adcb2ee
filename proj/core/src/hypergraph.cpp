#include "hsd/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace hsd {

// ---------------------------------------------------------------- Simplex --

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

Simplex Simplex::from_sorted(std::vector<VertexId> vertices) {
  Simplex s;
  s.vertices_ = std::move(vertices);
  return s;
}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Simplex Simplex::face(std::size_t i) const {
  if (vertices_.size() < 2) throw std::invalid_argument("a vertex has no faces");
  if (i >= vertices_.size()) throw std::out_of_range("face index out of range");
  std::vector<VertexId> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j)
    if (j != i) out.push_back(vertices_[j]);
  return from_sorted(std::move(out));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(face(i));
  return out;
}

std::vector<Simplex> Simplex::all_faces() const {
  const std::size_t n = vertices_.size();
  if (n > 30) throw std::length_error("simplex too large to enumerate its faces");
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> vs;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1U) vs.push_back(vertices_[j]);
    out.push_back(from_sorted(std::move(vs)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
  for (VertexId v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += '}';
  return out;
}

// ------------------------------------------------------------ VertexTable --

VertexTable::VertexTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<VertexId>(i)).second)
      throw std::invalid_argument("duplicate vertex label '" + labels_[i] + "'");
  }
}

VertexTable VertexTable::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return VertexTable(std::move(labels));
}

std::optional<VertexId> VertexTable::find(const std::string& label) const {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  return std::nullopt;
}

// ------------------------------------------------------------- Hypergraph --

Hypergraph::Hypergraph(VertexTable vertices, std::vector<Simplex> edges)
    : vertices_(std::move(vertices)) {
  if (edges.empty()) throw std::invalid_argument("a hypergraph needs at least one edge");
  for (const Simplex& e : edges) {
    if (e.last() >= vertices_.size())
      throw std::invalid_argument("edge " + to_string(e) + " references vertex " +
                                  std::to_string(e.last()) + " outside the vertex table");
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
    throw std::invalid_argument("duplicate edge " + to_string(*it));
  edge_count_ = edges.size();
  buckets_.resize(static_cast<std::size_t>(edges.back().dim()) + 1);
  for (Simplex& e : edges) buckets_[static_cast<std::size_t>(e.dim())].push_back(std::move(e));
}

std::span<const Simplex> Hypergraph::edges(int dim) const {
  if (dim < 0 || dim > max_dim()) return {};
  return buckets_[static_cast<std::size_t>(dim)];
}

std::vector<Simplex> Hypergraph::all_edges() const {
  std::vector<Simplex> out;
  out.reserve(edge_count_);
  for (const auto& bucket : buckets_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::optional<std::size_t> Hypergraph::index_in_dim(const Simplex& s) const {
  auto bucket = edges(s.dim());
  auto it = std::lower_bound(bucket.begin(), bucket.end(), s);
  if (it == bucket.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - bucket.begin());
}

bool Hypergraph::contains(const Simplex& s) const { return index_in_dim(s).has_value(); }

// ------------------------------------------------------ SimplicialComplex --

SimplicialComplex::SimplicialComplex(Hypergraph h) : h_(std::move(h)) {
  if (!is_simplicial_complex(h_))
    throw std::invalid_argument("hypergraph is not closed under taking faces");
}

bool is_simplicial_complex(const Hypergraph& h) {
  // Checking facets suffices: closure under facets implies closure under all faces.
  for (int d = 1; d <= h.max_dim(); ++d)
    for (const Simplex& s : h.edges(d))
      for (const Simplex& f : s.facets())
        if (!h.contains(f)) return false;
  return true;
}

SimplicialComplex simplicial_closure(const Hypergraph& h) {
  std::set<Simplex> closed;
  // Walk top-down so that a face already present is never expanded twice.
  for (int d = h.max_dim(); d >= 0; --d) {
    for (const Simplex& e : h.edges(d)) {
      if (closed.contains(e)) continue;
      std::vector<Simplex> stack{e};
      while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (!closed.insert(s).second) continue;
        for (Simplex& f : s.facets())
          if (!closed.contains(f)) stack.push_back(std::move(f));
      }
    }
  }
  return SimplicialComplex(
      Hypergraph(h.vertices(), std::vector<Simplex>(closed.begin(), closed.end())),
      SimplicialComplex::Trusted{});
}

// ------------------------------------------------------------ SimplexIndex --

SimplexIndex::SimplexIndex(const SimplicialComplex& k) {
  simplices_.reserve(k.simplex_count());
  for (int d = 0; d <= k.max_dim(); ++d) {
    offsets_.push_back(simplices_.size());
    for (const Simplex& s : k.simplices(d)) simplices_.push_back(s);
  }
  offsets_.push_back(simplices_.size());
  lookup_.reserve(simplices_.size());
  for (std::size_t i = 0; i < simplices_.size(); ++i) lookup_.emplace(simplices_[i], i);
}

std::optional<std::size_t> SimplexIndex::find(const Simplex& s) const {
  if (auto it = lookup_.find(s); it != lookup_.end()) return it->second;
  return std::nullopt;
}

std::size_t SimplexIndex::offset(int dim) const {
  if (dim < 0) return 0;
  if (static_cast<std::size_t>(dim) >= offsets_.size()) return simplices_.size();
  return offsets_[static_cast<std::size_t>(dim)];
}

// --------------------------------------------------------------- VertexMap --

VertexMap::VertexMap(Hypergraph source, Hypergraph target, std::vector<VertexId> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.vertex_count())
    throw std::invalid_argument("vertex map must assign every source vertex");
  for (VertexId v : map_)
    if (v >= target_.vertex_count())
      throw std::invalid_argument("vertex map image " + std::to_string(v) + " out of range");
}

VertexMap VertexMap::identity(const Hypergraph& h) {
  std::vector<VertexId> ids(h.vertex_count());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i);
  return VertexMap(h, h, std::move(ids));
}

Simplex VertexMap::image(const Simplex& s) const {
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (VertexId v : s.vertices()) out.push_back(map_.at(v));
  return Simplex(std::move(out));
}

bool VertexMap::is_morphism() const {
  for (int d = 0; d <= source_.max_dim(); ++d)
    for (const Simplex& e : source_.edges(d))
      if (!target_.contains(image(e))) return false;
  return true;
}

VertexMap compose(const VertexMap& g, const VertexMap& f) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("cannot compose: target and source differ");
  std::vector<VertexId> map(f.map().size());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = g(f(static_cast<VertexId>(v)));
  return VertexMap(f.source(), g.target(), std::move(map));
}

Hypergraph apply_morphism(const VertexMap& m, const Hypergraph& h) {
  if (h.vertex_count() != m.source().vertex_count())
    throw std::invalid_argument("hypergraph is not over the map's source vertex table");
  std::set<Simplex> image;
  for (int d = 0; d <= h.max_dim(); ++d) {
    for (const Simplex& e : h.edges(d)) {
      Simplex img = m.image(e);
      if (!m.target().contains(img))
        throw std::invalid_argument("image " + to_string(img) + " of edge " + to_string(e) +
                                    " is not an edge of the target");
      image.insert(std::move(img));
    }
  }
  return Hypergraph(m.target().vertices(), std::vector<Simplex>(image.begin(), image.end()));
}

}  // namespace hsd
