#include "hsd/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace hsd {

// ---------------------------------------------------------------- RankWord --

RankWord::RankWord(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("rank word must be nonempty");
  if (word_.front() < 0) throw std::invalid_argument("rank word entries must be nonnegative");
  for (std::size_t i = 1; i < word_.size(); ++i)
    if (word_[i] <= word_[i - 1])
      throw std::invalid_argument("rank word must be strictly increasing");
}

std::optional<std::size_t> RankWord::position_of(int r) const {
  auto it = std::lower_bound(word_.begin(), word_.end(), r);
  if (it == word_.end() || *it != r) return std::nullopt;
  return static_cast<std::size_t>(it - word_.begin());
}

bool RankWord::can_lower(std::size_t k) const {
  if (k >= word_.size()) return false;
  return k == 0 ? word_[0] > 0 : word_[k] > word_[k - 1] + 1;
}

RankWord RankWord::lowered(std::size_t k) const {
  if (!can_lower(k))
    throw std::invalid_argument("position " + std::to_string(k) + " of the rank word cannot be lowered");
  RankWord out = *this;
  --out.word_[k];
  return out;
}

int RankWord::distance_to_flag() const {
  int p = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) p += word_[i] - static_cast<int>(i);
  return p;
}

Schedule default_schedule(const RankWord& w) {
  Schedule s;
  for (std::size_t i = 0; i < w.length(); ++i)
    for (int r = w.word()[i]; r > static_cast<int>(i); --r) s.push_back(r);
  return s;
}

std::vector<Schedule> all_schedules(const RankWord& w, std::size_t limit) {
  std::vector<Schedule> out;
  Schedule current;
  auto walk = [&](auto&& self, const RankWord& at) -> void {
    if (at.is_flag()) {
      if (out.size() >= limit) throw std::length_error("too many lowering schedules");
      out.push_back(current);
      return;
    }
    for (std::size_t k = 0; k < at.length(); ++k) {
      if (!at.can_lower(k)) continue;
      current.push_back(at.word()[k]);
      self(self, at.lowered(k));
      current.pop_back();
    }
  };
  walk(walk, w);
  return out;
}

// --------------------------------------------------------------- FacePoset --

FacePoset::FacePoset(SimplicialComplex k) : complex_(std::move(k)), index_(complex_) {
  facets_.resize(index_.size());
  for (std::size_t id = 0; id < index_.size(); ++id)
    for (const Simplex& f : index_.at(id).facets())
      facets_[id].push_back(static_cast<ElementId>(*index_.find(f)));
}

bool FacePoset::leq(ElementId a, ElementId b) const {
  return index_.at(a).is_face_of(index_.at(b));
}

ElementId FacePoset::id_of(const Simplex& s) const {
  auto hit = index_.find(s);
  if (!hit) throw std::invalid_argument(to_string(s) + " is not a simplex of the complex");
  return static_cast<ElementId>(*hit);
}

Chain FacePoset::chain_of(std::initializer_list<Simplex> simplices) const {
  std::vector<ElementId> parts;
  for (const Simplex& s : simplices) parts.push_back(id_of(s));
  Chain c(std::move(parts));
  if (!is_chain(c)) throw std::invalid_argument("simplices do not form a chain");
  return c;
}

RankWord FacePoset::rank_word(const Chain& c) const {
  std::vector<int> w;
  w.reserve(c.length());
  for (ElementId e : c.parts()) w.push_back(rank(e));
  return RankWord(std::move(w));
}

bool FacePoset::is_chain(const Chain& c) const {
  for (ElementId e : c.parts())
    if (e >= size()) return false;
  for (std::size_t i = 1; i < c.length(); ++i)
    if (c[i - 1] == c[i] || !leq(c[i - 1], c[i])) return false;
  return true;
}

// ----------------------------------------------------------- F refinement --

FlagSet make_flag_set(const FacePoset& fp, const Chain& base) {
  if (!fp.is_chain(base)) throw std::invalid_argument("base is not a chain of the face poset");
  return FlagSet{base, {base}, fp.rank_word(base)};
}

FlagSet refine_step(const FacePoset& fp, const FlagSet& fs, int r) {
  auto pos = fs.word.position_of(r);
  if (!pos) throw std::invalid_argument("rank " + std::to_string(r) + " does not occur in the rank word");
  const std::size_t k = *pos;
  RankWord next = fs.word.lowered(k);

  std::vector<Chain> out;
  for (const Chain& c : fs.members) {
    for (ElementId tau : fp.facets(c[k])) {
      if (k > 0 && !fp.leq(c[k - 1], tau)) continue;
      out.push_back(c.with_part(k, tau));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return FlagSet{fs.base, std::move(out), std::move(next)};
}

std::vector<Chain> initial_elements(const FacePoset& fp, const Chain& x, const Schedule& schedule) {
  FlagSet fs = make_flag_set(fp, x);
  for (int r : schedule) fs = refine_step(fp, fs, r);
  if (!fs.word.is_flag()) throw std::invalid_argument("schedule does not reach a flag");
  return std::move(fs.members);
}

std::vector<Chain> initial_elements(const FacePoset& fp, const Chain& x) {
  if (!fp.is_chain(x)) throw std::invalid_argument("not a chain of the face poset");
  return initial_elements(fp, x, default_schedule(fp.rank_word(x)));
}

std::vector<Chain> flag_oracle(const FacePoset& fp, const Chain& x) {
  if (!fp.is_chain(x)) throw std::invalid_argument("not a chain of the face poset");
  const std::size_t n = x.length();
  std::vector<std::vector<Simplex>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Simplex& f : fp.simplex(x[i]).all_faces())
      if (f.dim() == static_cast<int>(i)) candidates[i].push_back(std::move(f));

  std::vector<Chain> out;
  std::vector<const Simplex*> picked;
  auto pick = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      std::vector<ElementId> parts;
      for (const Simplex* s : picked) parts.push_back(fp.id_of(*s));
      out.emplace_back(std::move(parts));
      return;
    }
    for (const Simplex& s : candidates[i]) {
      if (i > 0 && !picked.back()->is_face_of(s)) continue;
      picked.push_back(&s);
      self(self, i + 1);
      picked.pop_back();
    }
  };
  pick(pick, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------- generic membership --

namespace {

void chains_below(const GradedPoset& p, const Chain& c, std::vector<ElementId>& prefix,
                  std::vector<Chain>& out) {
  const std::size_t i = prefix.size();
  if (i == c.length()) {
    out.emplace_back(prefix);
    return;
  }
  for (ElementId y = 0; y < p.size(); ++y) {
    if (!p.leq(y, c[i])) continue;
    if (i > 0 && !p.less(prefix.back(), y)) continue;
    prefix.push_back(y);
    chains_below(p, c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool membership(const MarkedGradedPoset& mp, const Chain& c) {
  if (!is_chain_in(mp.poset, c)) throw std::invalid_argument("not a chain of the poset");
  if (!mp.is_marked(c.top())) return false;
  std::vector<Chain> below;
  std::vector<ElementId> prefix;
  chains_below(mp.poset, c, prefix, below);
  for (const Chain& y : below)
    if (!mp.is_marked(y.top())) return false;
  return true;
}

Hypergraph hypergraph_from_marked_poset(const MarkedGradedPoset& mp, std::optional<int> nmax) {
  const int top_n = nmax.value_or(mp.poset.max_rank());
  std::vector<Simplex> edges;
  for (int n = 0; n <= top_n; ++n)
    for (const Chain& c : chains_with_marked_top(mp, n))
      if (membership(mp, c))
        edges.emplace_back(std::vector<VertexId>(c.parts().begin(), c.parts().end()));
  if (edges.empty())
    throw std::invalid_argument("no chain is accepted; a hypergraph must have an edge");

  std::vector<std::string> labels;
  for (ElementId e = 0; e < mp.poset.size(); ++e) labels.push_back(mp.poset.label(e));
  VertexTable table;
  try {
    table = VertexTable(std::move(labels));
  } catch (const std::invalid_argument&) {
    table = VertexTable::numbered(mp.poset.size());
  }
  return Hypergraph(std::move(table), std::move(edges));
}

// ------------------------------------------------------ MembershipOracle --

MembershipOracle::MembershipOracle(const FacePoset& fp, std::vector<bool> marked)
    : fp_(&fp), marked_(std::move(marked)) {
  if (marked_.size() != fp.size()) throw std::invalid_argument("marking must cover every simplex");
}

MembershipOracle::MembershipOracle(const FacePoset& fp, const Hypergraph& h)
    : fp_(&fp), marked_(fp.size()) {
  for (std::size_t id = 0; id < fp.size(); ++id)
    marked_[id] = h.contains(fp.simplex(static_cast<ElementId>(id)));
}

// A chain tau below c has tau_i inside c_i ∩ tau_n for every i, and a face T
// of c_n is the top of some such chain iff |T| > n and |c_i ∩ T| > i for
// i < n (pick one new vertex of c_i ∩ T per level). So c is accepted iff all
// those faces are marked.
bool MembershipOracle::contains(const Chain& c) const {
  if (!marked_[c.top()]) return false;
  const std::size_t n = c.length() - 1;
  const Simplex& top = fp_->simplex(c.top());
  if (top.size() > 62) throw std::length_error("simplex too large for membership test");
  std::vector<std::uint64_t> level(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Simplex& s = fp_->simplex(c[i]);
    for (std::size_t j = 0; j < top.size(); ++j)
      if (s.contains(top[j])) level[i] |= std::uint64_t{1} << j;
  }
  const std::uint64_t full = (std::uint64_t{1} << top.size()) - 1;
  std::vector<VertexId> ids;
  for (std::uint64_t t = 1; t < full; ++t) {
    if (static_cast<std::size_t>(std::popcount(t)) <= n) continue;
    bool reachable = true;
    for (std::size_t i = 0; i < n && reachable; ++i)
      reachable = static_cast<std::size_t>(std::popcount(level[i] & t)) > i;
    if (!reachable) continue;
    ids.clear();
    for (std::size_t j = 0; j < top.size(); ++j)
      if (t >> j & 1U) ids.push_back(top[j]);
    if (!marked_[fp_->id_of(Simplex::from_sorted(ids))]) return false;
  }
  return true;
}

// ------------------------------------------------------------- subdivide --

EdgeCapExceeded::EdgeCapExceeded(std::size_t cap_, std::size_t rounds,
                                 std::optional<IteratedSubdivision> partial_)
    : std::runtime_error("subdivision exceeded the edge cap of " + std::to_string(cap_) +
                         " edges after " + std::to_string(rounds) + " completed round(s)"),
      cap(cap_),
      rounds_completed(rounds),
      partial(std::move(partial_)) {}

namespace {

std::string bracket_label(const Simplex& s, const VertexTable& base) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += base.label(s[i]);
  }
  out += ']';
  return out;
}

}  // namespace

SubdivisionResult subdivide(const Hypergraph& h, const SubdivisionOptions& opts) {
  FacePoset fp(simplicial_closure(h));
  MembershipOracle oracle(fp, h);

  std::vector<std::vector<ElementId>> below(fp.size());
  std::vector<bool> below_ready(fp.size(), false);
  auto proper_faces = [&](ElementId e) -> const std::vector<ElementId>& {
    if (!below_ready[e]) {
      for (const Simplex& f : fp.simplex(e).all_faces())
        if (f.size() < fp.simplex(e).size()) below[e].push_back(fp.id_of(f));
      below_ready[e] = true;
    }
    return below[e];
  };

  std::vector<Simplex> edges;
  std::vector<ElementId> rev;
  auto visit = [&](auto&& self) -> void {
    Chain c(std::vector<ElementId>(rev.rbegin(), rev.rend()));
    if (oracle.contains(c)) {
      if (edges.size() >= opts.edge_cap)
        throw EdgeCapExceeded(opts.edge_cap, 0, IteratedSubdivision{h, {}});
      edges.push_back(Simplex::from_sorted(std::vector<VertexId>(c.parts().begin(), c.parts().end())));
    }
    for (ElementId f : proper_faces(rev.back())) {
      rev.push_back(f);
      self(self);
      rev.pop_back();
    }
  };
  for (ElementId top = 0; top < fp.size(); ++top) {
    if (!oracle.is_marked(top)) continue;
    rev.assign(1, top);
    visit(visit);
  }

  std::vector<std::string> labels;
  labels.reserve(fp.size());
  for (const Simplex& s : fp.index().simplices()) labels.push_back(bracket_label(s, h.vertices()));
  return SubdivisionResult{Hypergraph(VertexTable(std::move(labels)), std::move(edges)),
                           fp.index().simplices()};
}

IteratedSubdivision iterate_subdivision(const Hypergraph& h, int k, const SubdivisionOptions& opts) {
  if (k < 0) throw std::invalid_argument("iteration count must be nonnegative");
  IteratedSubdivision out{h, {}};
  for (int round = 0; round < k; ++round) {
    try {
      SubdivisionResult r = subdivide(out.hypergraph, opts);
      out.hypergraph = std::move(r.hypergraph);
      out.provenance.push_back(std::move(r.provenance));
    } catch (const EdgeCapExceeded& e) {
      throw EdgeCapExceeded(e.cap, static_cast<std::size_t>(round), std::move(out));
    }
  }
  return out;
}

VertexMap subdivide_morphism(const VertexMap& m) {
  if (!m.is_morphism()) throw std::invalid_argument("vertex map is not a morphism of hypergraphs");
  SubdivisionResult src = subdivide(m.source());
  SubdivisionResult dst = subdivide(m.target());
  SimplexIndex target_index(simplicial_closure(m.target()));
  std::vector<VertexId> map;
  map.reserve(src.provenance.size());
  for (const Simplex& s : src.provenance)
    map.push_back(static_cast<VertexId>(*target_index.find(m.image(s))));
  return VertexMap(std::move(src.hypergraph), std::move(dst.hypergraph), std::move(map));
}

}  // namespace hsd
