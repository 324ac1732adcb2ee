#include "hsd/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hsd {

namespace {

ElementSet normalized(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void check_ids(const GradedPoset& p, const ElementSet& ys) {
  for (ElementId y : ys)
    if (y >= p.size()) throw std::invalid_argument("element id out of range");
}

}  // namespace

// ------------------------------------------------------------- GradedPoset --

GradedPoset::GradedPoset(std::vector<int> ranks,
                         std::vector<std::pair<ElementId, ElementId>> covers,
                         std::vector<std::string> labels)
    : ranks_(std::move(ranks)),
      down_(ranks_.size()),
      up_(ranks_.size()),
      labels_(std::move(labels)) {
  const std::size_t n = ranks_.size();
  if (!labels_.empty() && labels_.size() != n)
    throw std::invalid_argument("label count does not match element count");
  for (int r : ranks_) {
    if (r < 0) throw std::invalid_argument("ranks must be nonnegative");
    max_rank_ = std::max(max_rank_, r);
  }
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw std::invalid_argument("cover references unknown element");
    if (ranks_[hi] != ranks_[lo] + 1)
      throw std::invalid_argument("cover (" + std::to_string(lo) + ", " + std::to_string(hi) +
                                  ") does not raise the rank by one");
    down_[hi].push_back(lo);
    up_[lo].push_back(hi);
  }
  for (auto& v : down_) v = normalized(std::move(v));
  for (auto& v : up_) v = normalized(std::move(v));

  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), ElementId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return ranks_[a] < ranks_[b]; });
  const std::size_t words = (n + 63) / 64;
  reach_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (ElementId b : order) {
    auto& row = reach_[b];
    row[b / 64] |= std::uint64_t{1} << (b % 64);
    for (ElementId a : down_[b])
      for (std::size_t w = 0; w < words; ++w) row[w] |= reach_[a][w];
    if (down_[b].empty() && ranks_[b] != 0) zero_based_ = false;
  }
}

bool GradedPoset::leq(ElementId a, ElementId b) const {
  return (reach_.at(b)[a / 64] >> (a % 64)) & 1U;
}

std::string GradedPoset::label(ElementId e) const {
  if (labels_.empty()) return std::to_string(e);
  return labels_.at(e);
}

MarkedGradedPoset::MarkedGradedPoset(GradedPoset p, std::vector<bool> marks)
    : poset(std::move(p)), marked(std::move(marks)) {
  if (marked.size() != poset.size())
    throw std::invalid_argument("marking must cover every element");
}

// ------------------------------------------------------------------- Chain --

Chain::Chain(std::vector<ElementId> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a chain must be nonempty");
}

Chain Chain::with_part(std::size_t i, ElementId e) const {
  Chain c = *this;
  c.parts_.at(i) = e;
  return c;
}

std::size_t ChainHash::operator()(const Chain& c) const noexcept {
  std::size_t h = c.length();
  for (ElementId e : c.parts()) h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool is_chain_in(const GradedPoset& p, const Chain& c) {
  for (ElementId e : c.parts())
    if (e >= p.size()) return false;
  for (std::size_t i = 1; i < c.length(); ++i)
    if (!p.less(c[i - 1], c[i])) return false;
  return true;
}

// ------------------------------------------------------- C / P / I operators --

ElementSet covered_by(const GradedPoset& p, const ElementSet& ys) {
  check_ids(p, ys);
  ElementSet out;
  for (ElementId y : ys) {
    auto lc = p.lower_covers(y);
    out.insert(out.end(), lc.begin(), lc.end());
  }
  return normalized(std::move(out));
}

ElementSet strictly_below(const GradedPoset& p, const ElementSet& ys) {
  check_ids(p, ys);
  ElementSet out;
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId y : ys)
      if (p.less(x, y)) {
        out.push_back(x);
        break;
      }
  return out;
}

ElementSet initial_below(const GradedPoset& p, const ElementSet& ys) {
  ElementSet below = strictly_below(p, ys);
  ElementSet out;
  // strictly_below is a down-set, so initial within it means initial in p.
  for (ElementId x : below)
    if (p.lower_covers(x).empty()) out.push_back(x);
  return out;
}

// ------------------------------------------------------------- face posets --

GradedPoset face_poset(const SimplicialComplex& k) {
  SimplexIndex index(k);
  std::vector<int> ranks;
  std::vector<std::string> labels;
  std::vector<std::pair<ElementId, ElementId>> covers;
  ranks.reserve(index.size());
  labels.reserve(index.size());
  for (std::size_t id = 0; id < index.size(); ++id) {
    const Simplex& s = index.at(id);
    ranks.push_back(s.dim());
    labels.push_back(to_string(s));
    for (const Simplex& f : s.facets())
      covers.emplace_back(static_cast<ElementId>(*index.find(f)), static_cast<ElementId>(id));
  }
  return GradedPoset(std::move(ranks), std::move(covers), std::move(labels));
}

MarkedGradedPoset marked_face_poset(const Hypergraph& h) {
  SimplicialComplex k = simplicial_closure(h);
  SimplexIndex index(k);
  std::vector<bool> marks(index.size());
  for (std::size_t id = 0; id < index.size(); ++id) marks[id] = h.contains(index.at(id));
  return MarkedGradedPoset(face_poset(k), std::move(marks));
}

// ------------------------------------------------------------------ chains --

namespace {

void extend_down(const GradedPoset& p, std::vector<ElementId>& rev, int remaining,
                 std::vector<Chain>& out) {
  if (remaining == 0) {
    out.emplace_back(std::vector<ElementId>(rev.rbegin(), rev.rend()));
    return;
  }
  const ElementId cur = rev.back();
  for (ElementId x = 0; x < p.size(); ++x) {
    if (!p.less(x, cur)) continue;
    rev.push_back(x);
    extend_down(p, rev, remaining - 1, out);
    rev.pop_back();
  }
}

bool has_chain_strictly_below(const GradedPoset& p, const Chain& c, std::size_t i,
                              std::vector<ElementId>& prefix, bool differs) {
  if (i == c.length()) return differs;
  for (ElementId y = 0; y < p.size(); ++y) {
    if (!p.leq(y, c[i])) continue;
    if (i > 0 && !p.less(prefix.back(), y)) continue;
    prefix.push_back(y);
    const bool found = has_chain_strictly_below(p, c, i + 1, prefix, differs || y != c[i]);
    prefix.pop_back();
    if (found) return true;
  }
  return false;
}

}  // namespace

std::vector<Chain> chains_with_marked_top(const MarkedGradedPoset& mp, int n) {
  std::vector<Chain> out;
  if (n < 0) return out;
  const GradedPoset& p = mp.poset;
  for (ElementId top = 0; top < p.size(); ++top) {
    if (!mp.is_marked(top) || (p.rank_starts_at_zero() && p.rank(top) < n)) continue;
    std::vector<ElementId> rev{top};
    extend_down(p, rev, n, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_initial_chain(const GradedPoset& p, const Chain& c) {
  if (p.rank_starts_at_zero()) {
    for (std::size_t i = 0; i < c.length(); ++i)
      if (p.rank(c[i]) != static_cast<int>(i)) return false;
    return true;
  }
  std::vector<ElementId> prefix;
  return !has_chain_strictly_below(p, c, 0, prefix, false);
}

bool is_S_successive(const MarkedGradedPoset& mp, const Chain& c) {
  if (!is_chain_in(mp.poset, c)) throw std::invalid_argument("not a chain of the poset");
  return mp.is_marked(c.top()) && is_initial_chain(mp.poset, c);
}

SimplicialComplex order_complex(const GradedPoset& p) {
  std::vector<std::vector<ElementId>> above(p.size());
  for (ElementId a = 0; a < p.size(); ++a)
    for (ElementId b = 0; b < p.size(); ++b)
      if (p.less(a, b)) above[a].push_back(b);

  std::vector<Simplex> simplices;
  std::vector<VertexId> stack;
  auto grow = [&](auto&& self) -> void {
    simplices.push_back(Simplex(std::vector<VertexId>(stack.begin(), stack.end())));
    for (ElementId b : above[stack.back()]) {
      stack.push_back(b);
      self(self);
      stack.pop_back();
    }
  };
  for (ElementId a = 0; a < p.size(); ++a) {
    stack.assign(1, a);
    grow(grow);
  }
  std::vector<std::string> labels;
  labels.reserve(p.size());
  for (ElementId e = 0; e < p.size(); ++e) labels.push_back(p.label(e));
  return SimplicialComplex(Hypergraph(VertexTable(std::move(labels)), std::move(simplices)));
}

// ------------------------------------------------------------ poset maps --

PosetMap::PosetMap(const MarkedGradedPoset& source, const MarkedGradedPoset& target,
                   std::vector<ElementId> map)
    : source_(&source), target_(&target), map_(std::move(map)) {
  const GradedPoset& sp = source.poset;
  const GradedPoset& tp = target.poset;
  if (map_.size() != sp.size()) throw std::invalid_argument("poset map must be total");
  for (ElementId e : map_)
    if (e >= tp.size()) throw std::invalid_argument("poset map image out of range");
  for (ElementId y = 0; y < sp.size(); ++y) {
    if (source.is_marked(y) && !target.is_marked(map_[y]))
      throw std::invalid_argument("poset map sends a marked element to an unmarked one");
    for (ElementId x : sp.lower_covers(y)) {
      if (!tp.leq(map_[x], map_[y]))
        throw std::invalid_argument("poset map is not order preserving");
      if (tp.rank(map_[y]) > tp.rank(map_[x]) + 1)
        throw std::invalid_argument("poset map violates the graded bound");
    }
  }
}

bool is_compatible(const PosetMap& m) {
  const GradedPoset& sp = m.source().poset;
  const GradedPoset& tp = m.target().poset;
  for (ElementId x = 0; x < sp.size(); ++x) {
    auto below_x = sp.lower_covers(x);
    for (ElementId z : tp.lower_covers(m(x))) {
      bool hit = std::any_of(below_x.begin(), below_x.end(),
                             [&](ElementId y) { return m(y) == z; });
      if (!hit) return false;
    }
  }
  return true;
}

std::vector<ElementId> induced_face_map(const VertexMap& m) {
  SimplexIndex src(simplicial_closure(m.source()));
  SimplexIndex dst(simplicial_closure(m.target()));
  std::vector<ElementId> out(src.size());
  for (std::size_t id = 0; id < src.size(); ++id) {
    auto hit = dst.find(m.image(src.at(id)));
    if (!hit) throw std::invalid_argument("vertex map is not a morphism of hypergraphs");
    out[id] = static_cast<ElementId>(*hit);
  }
  return out;
}

std::string to_dot(const MarkedGradedPoset& mp) {
  const GradedPoset& p = mp.poset;
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (ElementId e = 0; e < p.size(); ++e) {
    os << "  n" << e << " [label=\"" << p.label(e) << "\""
       << (mp.is_marked(e) ? ", shape=box" : ", shape=ellipse, style=dashed") << "];\n";
  }
  for (ElementId e = 0; e < p.size(); ++e)
    for (ElementId lo : p.lower_covers(e)) os << "  n" << lo << " -> n" << e << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hsd
