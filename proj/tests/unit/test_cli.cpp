#include <catch_amalgamated.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "hsd/io.hpp"
#include "hsd/random.hpp"

using namespace hsd;
using cli::RunConfig;

namespace {

const std::string kExample = R"({"vertices":[0,1,2],"edges":[[0],[1],[0,1],[1,2],[0,1,2]]})";

RunConfig config(std::string command) {
  RunConfig cfg;
  cfg.command = std::move(command);
  return cfg;
}

}  // namespace

TEST_CASE("closure writes the simplicial closure") {
  const auto r = cli::run(config("closure"), kExample);
  CHECK(r.exit_code == cli::kOk);
  CHECK(parse_hypergraph(r.out).edge_count() == 7);
}

TEST_CASE("subdivide writes the iterated result with provenance") {
  auto cfg = config("subdivide");
  auto r = cli::run(cfg, kExample);
  CHECK(r.exit_code == cli::kOk);
  CHECK(parse_hypergraph(r.out).edge_count() == 14);
  CHECK(r.out.find("\"provenance\":[[[0],") != std::string::npos);

  cfg.iterations = 0;
  r = cli::run(cfg, kExample);
  CHECK(r.out == hypergraph_to_json(parse_hypergraph(kExample)));

  cfg.iterations = 3;
  cfg.edge_cap = 60;
  r = cli::run(cfg, kExample);
  CHECK(r.exit_code == cli::kCapExceeded);
  CHECK(r.err.find("edge cap of 60") != std::string::npos);
  CHECK(parse_hypergraph(r.out).edge_count() <= 60);
}

TEST_CASE("homology reports groups per dimension") {
  auto cfg = config("homology");
  cfg.ring = CoefficientRing::parse("gf2");
  const auto r = cli::run(cfg, kExample);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.out.find("\"ring\":\"GF2\"") != std::string::npos);
  CHECK(r.out.find("{\"dim\":0,\"rank\":1,\"torsion\":[]}") != std::string::npos);
}

TEST_CASE("verify passes on the worked example and on random instances") {
  auto r = cli::run(config("verify"), kExample);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.out.find("\"pass\":true") != std::string::npos);

  auto cfg = config("verify");
  cfg.random_instances = 5;
  cfg.seed = 10;
  cfg.vertices = 4;
  cfg.edges = 6;
  CHECK_FALSE(cli::needs_input(cfg));
  r = cli::run(cfg, "");
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.out.rfind("instance,seed,vertices,edges,pass,failed\n0,10,", 0) == 0);
  CHECK(r.out.find("4,14,") != std::string::npos);
  CHECK(r.out.find("passed 5/5\n") != std::string::npos);
}

TEST_CASE("random matches the library generator") {
  auto cfg = config("random");
  cfg.seed = 42;
  CHECK_FALSE(cli::needs_input(cfg));
  const auto r = cli::run(cfg, "");
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.out == hypergraph_to_json(random_hypergraph({5, 10, 42})));

  cfg.vertices = 2;
  cfg.edges = 4;
  CHECK(cli::run(cfg, "").exit_code == cli::kUsageError);
}

TEST_CASE("stats emits one row per round and dimension") {
  auto cfg = config("stats");
  cfg.iterations = 2;
  auto r = cli::run(cfg, kExample);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.out.rfind("iteration,dim,edge_count,wall_ms,status\n0,0,2,NA,ok\n0,1,2,NA,ok\n0,2,1,NA,ok\n", 0) == 0);
  CHECK(r.out.find("2,2,36,NA,ok\n") != std::string::npos);

  cfg.timing = true;
  r = cli::run(cfg, kExample);
  CHECK(r.out.find(",NA,") == std::string::npos);

  cfg.timing = false;
  cfg.iterations = 3;
  cfg.edge_cap = 60;
  r = cli::run(cfg, kExample);
  CHECK(r.exit_code == cli::kCapExceeded);
  CHECK(r.out.find("3,NA,NA,NA,cap_exceeded\n") != std::string::npos);
}

TEST_CASE("bad input and arguments are usage errors") {
  auto r = cli::run(config("closure"), "{\"vertices\":[0]}");
  CHECK(r.exit_code == cli::kUsageError);
  CHECK(r.err.rfind("parse error: ", 0) == 0);
  CHECK(cli::run(config("nonsense"), kExample).exit_code == cli::kUsageError);
  auto cfg = config("subdivide");
  cfg.iterations = -1;
  CHECK(cli::run(cfg, kExample).exit_code == cli::kUsageError);
}

TEST_CASE("every command is deterministic") {
  for (const char* name : {"closure", "subdivide", "homology", "verify", "random", "stats"}) {
    auto cfg = config(name);
    cfg.seed = 3;
    const auto a = cli::run(cfg, kExample);
    const auto b = cli::run(cfg, kExample);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
  }
}
