#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "hsd/io.hpp"

using namespace hsd;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string parse_error_of(const std::string& text) {
  try {
    (void)parse_hypergraph(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("hypergraph JSON round trips") {
  const Hypergraph h = fixtures::worked_example();
  const std::string text = hypergraph_to_json(h);
  CHECK(text == "{\"edges\":[[0],[1],[0,1],[1,2],[0,1,2]],\"vertices\":[\"0\",\"1\",\"2\"]}\n");
  CHECK(parse_hypergraph(text) == h);
  for (const Hypergraph& g : fixtures::random_corpus(40, 71)) CHECK(parse_hypergraph(hypergraph_to_json(g)) == g);
}

TEST_CASE("parsing accepts string labels and unsorted edges") {
  const Hypergraph h = parse_hypergraph(read_file(fixtures::data_path("hollow_triangle.json")));
  CHECK(h.vertices().label(2) == "c");
  CHECK(h.edge_count() == 6);
  CHECK(h.contains(Simplex{0, 2}));
  CHECK(parse_hypergraph(R"({"vertices":[0,1],"edges":[[1,0,1]]})").contains(Simplex{0, 1}));
}

TEST_CASE("parse errors name the offending edge") {
  CHECK(parse_error_of(R"({"vertices":[0],"edges":[[0],[]]})").find("edge 1: empty edge") != std::string::npos);
  CHECK(parse_error_of(R"({"vertices":[0],"edges":[[3]]})").find("edge 0: vertex index 3 out of range") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"vertices":[0,1],"edges":[[0,1],[1,0]]})").find("edge 1: duplicate edge") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"vertices":[0],"edges":[["x"]]})").find("edge 0") != std::string::npos);
  CHECK(parse_error_of(R"({"vertices":[0],"edges":[]})").find("at least one edge") != std::string::npos);
  CHECK(parse_error_of(R"({"vertices":[0,0],"edges":[[0]]})").size() > 0);
  CHECK(parse_error_of(R"({"edges":[[0]]})").find("vertices") != std::string::npos);
  CHECK(parse_error_of("[1,2").find("invalid JSON") != std::string::npos);
  CHECK(parse_error_of("[]").find("object") != std::string::npos);
}

TEST_CASE("subdivision JSON carries provenance") {
  const SubdivisionResult sd = subdivide(fixtures::worked_example());
  const std::string one = subdivision_to_json(sd.hypergraph, sd.provenance);
  CHECK(one.find("\"provenance\":[[0],[1],[2],[0,1],[0,2],[1,2],[0,1,2]]") != std::string::npos);
  CHECK(one.find("\"[0,1,2]\"") != std::string::npos);

  const IteratedSubdivision two = iterate_subdivision(fixtures::worked_example(), 2);
  const std::string rounds = subdivision_to_json(two);
  CHECK(rounds.find("\"provenance\":[[[0],[1],[2],[0,1],[0,2],[1,2],[0,1,2]],[") != std::string::npos);
  CHECK(parse_hypergraph(rounds) == two.hypergraph);
}

TEST_CASE("homology and report JSON") {
  const auto groups = embedded_homology(fixtures::worked_example(), CoefficientRing::integers());
  CHECK(homology_to_json(CoefficientRing::integers(), groups) ==
        "{\"groups\":[{\"dim\":0,\"rank\":1,\"torsion\":[]},{\"dim\":1,\"rank\":0,\"torsion\":[]},"
        "{\"dim\":2,\"rank\":0,\"torsion\":[]}],\"ring\":\"Z\"}\n");

  const InvarianceReport r = verify_invariance(fixtures::worked_example(), CoefficientRing::integers());
  const std::string text = report_to_json(r);
  CHECK(text.find("{\"name\":\"pi_rho_identity\",\"pass\":true}") != std::string::npos);
  CHECK(text.find("\"pass\":true,\"ring\":\"Z\"") != std::string::npos);
  CHECK(text.find("\"induced\":[{\"dim\":0,\"matrix\":[[\"1\"]]}") != std::string::npos);
}
