#include <catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "hsd/random.hpp"
#include "hsd/subdivision.hpp"
#include "oracles.hpp"

using namespace hsd;

namespace {

using SimplexChain = std::vector<Simplex>;

std::set<SimplexChain> edges_as_chains(const SubdivisionResult& sd, int dim) {
  std::set<SimplexChain> out;
  for (const Simplex& e : sd.hypergraph.edges(dim)) {
    SimplexChain c;
    for (VertexId v : e.vertices()) c.push_back(sd.provenance.at(v));
    out.insert(std::move(c));
  }
  return out;
}

std::set<oracle::MaskChain> to_masks(const FacePoset& fp, const std::vector<Chain>& chains) {
  std::set<oracle::MaskChain> out;
  for (const Chain& c : chains) {
    oracle::MaskChain m;
    for (ElementId e : c.parts()) m.push_back(oracle::mask_of(fp.simplex(e)));
    out.insert(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("rank words and lowering schedules") {
  const RankWord w({0, 2, 4});
  CHECK(w.distance_to_flag() == 3);
  CHECK_FALSE(w.can_lower(0));
  CHECK(w.can_lower(1));
  CHECK(w.lowered(2).word() == std::vector<int>{0, 2, 3});
  CHECK_THROWS_AS(w.lowered(0), std::invalid_argument);
  CHECK(default_schedule(w) == Schedule{2, 4, 3});

  const auto all = all_schedules(w);
  const std::set<Schedule> got(all.begin(), all.end());
  CHECK(got == std::set<Schedule>{{2, 4, 3}, {4, 2, 3}});
  CHECK(all_schedules(RankWord({0, 1})).size() == 1);
  CHECK_THROWS_AS(RankWord({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(all_schedules(RankWord({0, 6, 12}), 5), std::length_error);
}

TEST_CASE("refinement schedules on {0}{0,1,2}{0,1,2,3,4}") {
  const FacePoset fp(simplicial_closure(Hypergraph(VertexTable::numbered(5), {{0, 1, 2, 3, 4}})));
  const Chain x = fp.chain_of({{0}, {0, 1, 2}, {0, 1, 2, 3, 4}});

  FlagSet fs = refine_step(fp, make_flag_set(fp, x), 4);
  CHECK(to_masks(fp, fs.members) ==
        to_masks(fp, {fp.chain_of({{0}, {0, 1, 2}, {0, 1, 2, 3}}), fp.chain_of({{0}, {0, 1, 2}, {0, 1, 2, 4}})}));
  fs = refine_step(fp, fs, 2);
  CHECK(fs.members.size() == 4);

  const std::vector<Chain> expected{
      fp.chain_of({{0}, {0, 1}, {0, 1, 2}}), fp.chain_of({{0}, {0, 1}, {0, 1, 3}}),
      fp.chain_of({{0}, {0, 1}, {0, 1, 4}}), fp.chain_of({{0}, {0, 2}, {0, 1, 2}}),
      fp.chain_of({{0}, {0, 2}, {0, 2, 3}}), fp.chain_of({{0}, {0, 2}, {0, 2, 4}})};
  const auto want = to_masks(fp, expected);
  CHECK(to_masks(fp, initial_elements(fp, x, {4, 2, 3})) == want);
  CHECK(to_masks(fp, initial_elements(fp, x, {2, 4, 3})) == want);
  CHECK(to_masks(fp, flag_oracle(fp, x)) == want);
  CHECK(to_masks(fp, initial_elements(fp, x)) == want);
  CHECK(oracle::minimal_chains_below({0b1, 0b111, 0b11111}) == want);

  CHECK_THROWS_AS(refine_step(fp, make_flag_set(fp, x), 3), std::invalid_argument);
  CHECK_THROWS_AS(initial_elements(fp, x, {4}), std::invalid_argument);
}

TEST_CASE("every schedule agrees with the flag oracle on random chains") {
  std::mt19937_64 rng(3);
  for (const SimplicialComplex& k : fixtures::random_complexes(12, 21, 6)) {
    const FacePoset fp(k);
    for (int trial = 0; trial < 8; ++trial) {
      // random chain: walk up from a random simplex by adding vertices
      Simplex s = fp.simplex(static_cast<ElementId>(uniform_below(rng, fp.size())));
      std::vector<ElementId> parts{fp.id_of(s)};
      for (ElementId e = 0; e < fp.size(); ++e)
        if (uniform_below(rng, 3) == 0 && fp.simplex(e).size() > fp.simplex(parts.back()).size() &&
            fp.leq(parts.back(), e))
          parts.push_back(e);
      const Chain x(parts);
      const auto want = to_masks(fp, flag_oracle(fp, x));
      oracle::MaskChain xm;
      for (ElementId e : x.parts()) xm.push_back(oracle::mask_of(fp.simplex(e)));
      CHECK(oracle::minimal_chains_below(xm) == want);
      for (const Schedule& sch : all_schedules(fp.rank_word(x)))
        CHECK(to_masks(fp, initial_elements(fp, x, sch)) == want);
    }
  }
}

TEST_CASE("worked example subdivides into the listed hyperedges") {
  const SubdivisionResult sd = subdivide(fixtures::worked_example());
  CHECK(sd.hypergraph.edge_count() == 14);
  CHECK(edges_as_chains(sd, 0) == std::set<SimplexChain>{{{0}}, {{1}}, {{0, 1}}});
  CHECK(edges_as_chains(sd, 1) == std::set<SimplexChain>{{{0}, {0, 1}},
                                                          {{1}, {0, 1}},
                                                          {{1}, {1, 2}},
                                                          {{2}, {1, 2}},
                                                          {{1}, {0, 1, 2}}});
  CHECK(edges_as_chains(sd, 2) == std::set<SimplexChain>{{{0}, {0, 1}, {0, 1, 2}},
                                                          {{1}, {0, 1}, {0, 1, 2}},
                                                          {{0}, {0, 2}, {0, 1, 2}},
                                                          {{2}, {0, 2}, {0, 1, 2}},
                                                          {{1}, {1, 2}, {0, 1, 2}},
                                                          {{2}, {1, 2}, {0, 1, 2}}});
  CHECK(sd.hypergraph.vertices().label(6) == "[0,1,2]");
  CHECK(sd.provenance.size() == 7);
}

TEST_CASE("subdivision is not comparable with the flag complex of the hypergraph") {
  const Hypergraph h = fixtures::worked_example();
  const SubdivisionResult sd = subdivide(h);
  const auto chains = oracle::chains_of(sd.hypergraph, sd.provenance);
  // chains of hyperedges ordered by inclusion
  std::set<oracle::Mask> edges;
  for (const Simplex& e : h.all_edges()) edges.insert(oracle::mask_of(e));
  const auto flag_complex = oracle::all_chains(edges);

  const oracle::MaskChain a{0b011, 0b111};
  const oracle::MaskChain b{0b100, 0b110};
  CHECK(flag_complex.count(a));
  CHECK_FALSE(chains.count(a));
  CHECK(chains.count(b));
  CHECK_FALSE(flag_complex.count(b));
}

TEST_CASE("a hyperedge without hyperedge facets does not become a vertex") {
  const SubdivisionResult sd = subdivide(fixtures::bare_triangle());
  CHECK(sd.hypergraph.edge_count(0) == 3);
  CHECK(sd.hypergraph.edge_count(1) == 0);
  CHECK(sd.hypergraph.edge_count(2) == 6);
}

TEST_CASE("subdivision matches the inductive cover closure") {
  for (const Hypergraph& h : fixtures::random_corpus(80, 101)) {
    const SubdivisionResult sd = subdivide(h);
    CHECK(oracle::chains_of(sd.hypergraph, sd.provenance) == oracle::subdivision_by_closure(h));
  }
}

TEST_CASE("generic membership agrees with the face poset fast path") {
  for (const Hypergraph& h : fixtures::random_corpus(25, 77, 4, 10)) {
    const MarkedGradedPoset mp = marked_face_poset(h);
    const FacePoset fp(simplicial_closure(h));
    const MembershipOracle fast(fp, h);
    for (int n = 0; n <= mp.poset.max_rank(); ++n)
      for (const Chain& c : chains_with_marked_top(mp, n)) CHECK(membership(mp, c) == fast.contains(c));

    const Hypergraph generic = hypergraph_from_marked_poset(mp);
    CHECK(generic.all_edges() == subdivide(h).hypergraph.all_edges());
  }
}

TEST_CASE("membership on a poset that is not a face poset") {
  // diamond 0 < 1, 2 < 3 with 1 unmarked
  const GradedPoset diamond({0, 1, 1, 2}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const MarkedGradedPoset mp(diamond, {true, false, true, true});
  CHECK(membership(mp, Chain{0, 2}));
  CHECK_FALSE(membership(mp, Chain{2, 3}));  // {0}{1} lies below
  CHECK_FALSE(membership(mp, Chain{0, 3}));  // {0}{1} lies below
  CHECK_FALSE(membership(mp, Chain{3}));     // {1} lies below
  CHECK(membership(mp, Chain{0, 2, 3}));
  CHECK_THROWS_AS(membership(mp, Chain{3, 0}), std::invalid_argument);
}

TEST_CASE("on simplicial complexes subdivision is barycentric subdivision") {
  for (const SimplicialComplex& k : fixtures::random_complexes(20, 9)) {
    const SubdivisionResult sd = subdivide(k.hypergraph());
    std::set<oracle::Mask> sets;
    for (const Simplex& s : k.hypergraph().all_edges()) sets.insert(oracle::mask_of(s));
    CHECK(oracle::chains_of(sd.hypergraph, sd.provenance) == oracle::all_chains(sets));
    CHECK(is_simplicial_complex(sd.hypergraph));
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n + 1; ++i) fact *= i;
    CHECK(subdivide(fixtures::full_simplex(n)).hypergraph.edge_count(static_cast<int>(n)) == fact);
  }
}

TEST_CASE("closure commutes with subdivision") {
  for (const Hypergraph& h : fixtures::random_corpus(40, 202)) {
    const SubdivisionResult sd = subdivide(h);
    const SubdivisionResult sd_closure = subdivide(simplicial_closure(h).hypergraph());
    CHECK(sd.provenance == sd_closure.provenance);
    CHECK(simplicial_closure(sd.hypergraph).hypergraph().all_edges() ==
          sd_closure.hypergraph.all_edges());
  }
}

TEST_CASE("iterated subdivision and the edge cap") {
  const Hypergraph h = fixtures::worked_example();
  const IteratedSubdivision zero = iterate_subdivision(h, 0);
  CHECK(zero.hypergraph == h);
  CHECK(zero.provenance.empty());

  const IteratedSubdivision two = iterate_subdivision(h, 2);
  REQUIRE(two.provenance.size() == 2);
  CHECK(two.hypergraph.edge_count(2) == 36);
  CHECK(two.provenance[1].size() ==
        simplicial_closure(subdivide(h).hypergraph).simplex_count());

  try {
    (void)iterate_subdivision(h, 3, {60});
    FAIL("cap not enforced");
  } catch (const EdgeCapExceeded& e) {
    CHECK(e.rounds_completed == 2);
    REQUIRE(e.partial);
    CHECK(e.partial->hypergraph == two.hypergraph);
  }
  try {
    (void)subdivide(h, {3});
    FAIL("cap not enforced");
  } catch (const EdgeCapExceeded& e) {
    CHECK(e.rounds_completed == 0);
    REQUIRE(e.partial);
    CHECK(e.partial->hypergraph == h);
  }
  CHECK_THROWS_AS(iterate_subdivision(h, -1), std::invalid_argument);

  const Hypergraph point(VertexTable::numbered(1), {{0}});
  CHECK(iterate_subdivision(point, 3).hypergraph.edge_count() == 1);
}

TEST_CASE("subdivision is functorial on morphisms") {
  const Hypergraph edge(VertexTable::numbered(2), {{0}, {1}, {0, 1}});
  const Hypergraph point(VertexTable::numbered(1), {{0}});
  const VertexMap collapse(edge, point, {0, 0});
  const VertexMap sd_collapse = subdivide_morphism(collapse);
  CHECK(sd_collapse.is_morphism());
  CHECK(sd_collapse.map() == std::vector<VertexId>{0, 0, 0});

  const Hypergraph tri = fixtures::worked_example();
  const VertexMap swap(tri, Hypergraph(VertexTable::numbered(3), {{1}, {0}, {0, 1}, {0, 2}, {0, 1, 2}}),
                       {1, 0, 2});
  REQUIRE(swap.is_morphism());
  const VertexMap sd_swap = subdivide_morphism(swap);
  CHECK(sd_swap.is_morphism());

  const VertexMap id = VertexMap::identity(tri);
  CHECK(subdivide_morphism(id).map() == VertexMap::identity(subdivide(tri).hypergraph).map());

  const Hypergraph only_edge(VertexTable::numbered(2), {{0, 1}});
  CHECK_THROWS_AS(subdivide_morphism(VertexMap(only_edge, only_edge, {0, 0})), std::invalid_argument);
}
