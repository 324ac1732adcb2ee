#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hsd/chains.hpp"
#include "oracles.hpp"

using namespace hsd;

namespace {

std::vector<std::size_t> ranks(const std::vector<HomologyGroup>& groups) {
  std::vector<std::size_t> out;
  for (const HomologyGroup& g : groups) out.push_back(g.rank);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Hypergraph projective_plane() {
  const std::vector<std::vector<VertexId>> tri{{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                               {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
  std::vector<Simplex> edges;
  for (const auto& t : tri) edges.emplace_back(t);
  return simplicial_closure(Hypergraph(VertexTable::numbered(6), std::move(edges))).hypergraph();
}

std::vector<HomologyGroup> nonzero_prefix(std::vector<HomologyGroup> groups) {
  while (!groups.empty() && groups.back().rank == 0 && groups.back().torsion.empty()) groups.pop_back();
  return groups;
}

GradedMap identity_on(const ChainComplex& c) {
  GradedMap f;
  for (std::size_t s : c.sizes) f.matrices.push_back(IntMatrix::identity(s));
  return f;
}

}  // namespace

TEST_CASE("coefficient rings parse and print") {
  CHECK(CoefficientRing::parse("z") == CoefficientRing::integers());
  CHECK(CoefficientRing::parse("Q") == CoefficientRing::rationals());
  CHECK(CoefficientRing::parse("gf2") == CoefficientRing::prime_field(2));
  CHECK(CoefficientRing::parse("GF(7)").characteristic() == 7);
  CHECK(CoefficientRing::prime_field(3).name() == "GF3");
  CHECK(CoefficientRing::integers().name() == "Z");
  CHECK_FALSE(CoefficientRing::integers().is_field());
  CHECK_THROWS_AS(CoefficientRing::parse("gf4"), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientRing::parse("r"), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientRing::prime_field(1), std::invalid_argument);
}

TEST_CASE("simplicial chain complexes square to zero") {
  for (const SimplicialComplex& k : fixtures::random_complexes(20, 4)) {
    const ChainComplex c = simplicial_chain_complex(k, CoefficientRing::integers());
    CHECK_FALSE(c.square_failure());
    for (int n = 0; n <= c.top_dim(); ++n) CHECK(c.size(n) == k.simplex_count(n));
  }
  const ChainComplex c = simplicial_chain_complex(simplicial_closure(fixtures::worked_example()),
                                                  CoefficientRing::integers());
  CHECK(c.d(1).at(0, 0) == -1);  // d{0,1} = {1} - {0}
  CHECK(c.d(1).at(1, 0) == 1);
  CHECK(c.d(0).rows() == 0);
  CHECK(c.d(5).cols() == 0);
  CHECK(c.size(-1) == 0);
}

TEST_CASE("homology of classical spaces") {
  const auto z = CoefficientRing::integers();
  const Hypergraph circle = fixtures::hollow_triangle();
  CHECK(ranks(embedded_homology(circle, z)) == std::vector<std::size_t>{1, 1});
  CHECK(ranks(embedded_homology(circle, CoefficientRing::prime_field(2))) == std::vector<std::size_t>{1, 1});

  const Hypergraph rp2 = projective_plane();
  const auto hz = embedded_homology(rp2, z);
  REQUIRE(hz.size() == 3);
  CHECK(hz[0].rank == 1);
  CHECK(hz[1].rank == 0);
  CHECK(hz[1].torsion == std::vector<Integer>{Integer(2)});
  CHECK(hz[2].rank == 0);
  CHECK(ranks(embedded_homology(rp2, CoefficientRing::prime_field(2))) == std::vector<std::size_t>{1, 1, 1});
  CHECK(ranks(embedded_homology(rp2, CoefficientRing::rationals())) == std::vector<std::size_t>{1});
  CHECK(oracle::embedded_betti(rp2, 2) == std::vector<std::size_t>{1, 1, 1});

  const Hypergraph ball = fixtures::full_simplex(4);
  CHECK(ranks(embedded_homology(ball, z)) == std::vector<std::size_t>{1});
}

TEST_CASE("worked example has the homology of a point") {
  // expected value comes from the dense oracle first
  const std::vector<std::size_t> expected = oracle::embedded_betti(fixtures::worked_example());
  REQUIRE(trimmed(expected) == std::vector<std::size_t>{1});
  const auto groups = embedded_homology(fixtures::worked_example(), CoefficientRing::integers());
  CHECK(ranks(groups) == trimmed(expected));
  for (const HomologyGroup& g : groups) CHECK(g.torsion.empty());
}

TEST_CASE("infimum complex dimensions match the dense oracle") {
  for (const Hypergraph& h : fixtures::random_corpus(60, 31)) {
    const EmbeddedComplex e = embedded_complex(h, CoefficientRing::integers());
    const InfimumComplex inf = infimum_complex(e);
    CHECK_FALSE(inf.complex.square_failure());
    const auto want = oracle::infimum_dims(h);
    for (std::size_t n = 0; n < want.size(); ++n) CHECK(inf.complex.size(static_cast<int>(n)) == want[n]);
  }
}

TEST_CASE("embedded homology matches the dense oracle over every ring") {
  for (const Hypergraph& h : fixtures::random_corpus(60, 47)) {
    const auto q = embedded_homology(h, CoefficientRing::rationals());
    const auto z = embedded_homology(h, CoefficientRing::integers());
    CHECK(ranks(q) == trimmed(oracle::embedded_betti(h)));
    CHECK(ranks(z) == ranks(q));
    for (std::uint64_t p : {2u, 3u}) {
      const auto fp = embedded_homology(h, CoefficientRing::prime_field(p));
      CHECK(ranks(fp) == trimmed(oracle::embedded_betti(h, p)));
      // universal coefficients: free part plus p-torsion in degrees n and n-1
      for (std::size_t n = 0; n < z.size(); ++n) {
        std::size_t expected = z[n].rank;
        for (const Integer& t : z[n].torsion) expected += (t % p == 0) ? 1 : 0;
        if (n > 0)
          for (const Integer& t : z[n - 1].torsion) expected += (t % p == 0) ? 1 : 0;
        CHECK(fp.at(n).rank == expected);
      }
    }
  }
}

TEST_CASE("embedded homology does not depend on the ambient complex") {
  for (const auto& [h, k] : fixtures::random_ambient_pairs(30, 5)) {
    for (auto ring : {CoefficientRing::integers(), CoefficientRing::prime_field(2)}) {
      const EmbeddedComplex small = embedded_complex(h, ring);
      const EmbeddedComplex big = embedded_complex(h, k, ring);
      CHECK(nonzero_prefix(homology(infimum_complex(small).complex)) ==
            nonzero_prefix(homology(infimum_complex(big).complex)));
    }
    std::set<oracle::Mask> ambient;
    for (const Simplex& s : k.hypergraph().all_edges()) ambient.insert(oracle::mask_of(s));
    CHECK(trimmed(oracle::embedded_betti(h, 0, ambient)) == trimmed(oracle::embedded_betti(h)));
  }
  const Hypergraph h = fixtures::worked_example();
  const SimplicialComplex tiny = simplicial_closure(Hypergraph(VertexTable::numbered(3), {{0, 1}}));
  CHECK_THROWS_AS(embedded_complex(h, tiny, CoefficientRing::integers()), std::invalid_argument);
}

TEST_CASE("map checks report the failing dimension and cell") {
  const auto ring = CoefficientRing::integers();
  const EmbeddedComplex e = embedded_complex(fixtures::worked_example(), ring);
  const GradedMap id = identity_on(e.ambient);
  CHECK(check_chain_map(id, e, e));
  CHECK(check_embedded_condition(id, e, e));

  GradedMap broken = id;
  broken.matrices[0] = IntMatrix(e.ambient.size(0), e.ambient.size(0));
  const CheckResult r = check_chain_map(broken, e, e);
  CHECK_FALSE(r);
  CHECK(r.detail.find("dimension 1") != std::string::npos);

  // send {0} to {2}, which is not a hyperedge
  GradedMap leak = id;
  leak.matrices[0].set_column(0, {{2, Integer(1)}});
  const CheckResult c = check_embedded_condition(leak, e, e);
  CHECK_FALSE(c);
  CHECK(c.detail.find("{0}") != std::string::npos);
  CHECK(c.detail.find("{2}") != std::string::npos);

  GradedMap wrong_shape;
  CHECK_THROWS_AS(check_chain_map(wrong_shape, e, e), std::invalid_argument);

  GradedMap zero;
  zero.degree = 1;
  for (int n = 0; n <= e.ambient.top_dim(); ++n)
    zero.matrices.emplace_back(e.ambient.size(n + 1), e.ambient.size(n));
  CHECK(check_homotopy(id, id, zero, e, e));
  CHECK_FALSE(check_homotopy_identity(id, broken, zero, e, e));
}

TEST_CASE("induced map of the identity is the identity") {
  for (const Hypergraph& h : fixtures::random_corpus(20, 63)) {
    for (auto ring : {CoefficientRing::integers(), CoefficientRing::prime_field(3)}) {
      const EmbeddedComplex e = embedded_complex(h, ring);
      const auto maps = induced_map_on_homology(identity_on(e.ambient), e, e);
      for (const HomologyMatrix& m : maps) {
        CHECK(m.rows == m.cols);
        for (std::size_t i = 0; i < m.rows; ++i)
          for (std::size_t j = 0; j < m.cols; ++j) CHECK(m.entries[i][j] == (i == j ? 1 : 0));
        CHECK(is_isomorphism(m, ring.is_field() ? ring : CoefficientRing::rationals()));
      }
    }
  }
  HomologyMatrix singular{0, 2, 2, {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}};
  CHECK_FALSE(is_isomorphism(singular, CoefficientRing::rationals()));
  HomologyMatrix mod2{0, 2, 2, {{Rational(1), Rational(1)}, {Rational(1), Rational(3)}}};
  CHECK(is_isomorphism(mod2, CoefficientRing::rationals()));
  CHECK_FALSE(is_isomorphism(mod2, CoefficientRing::prime_field(2)));
}
