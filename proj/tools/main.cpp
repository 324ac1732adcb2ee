#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cli.hpp"

namespace {

using hsd::cli::RunConfig;

bool read_all(const std::optional<std::string>& path, std::string& text) {
  if (!path) {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(*path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

void add_io(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-i,--input", cfg.input, "Input hypergraph JSON (default: stdin)");
  sub->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
}

void add_generator(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--vertices", cfg.vertices, "Vertex count")->check(CLI::PositiveNumber);
  sub->add_option("--edges", cfg.edges, "Edge count")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_flag("--allow-isolated", cfg.allow_isolated, "Keep vertices no edge uses");
  sub->add_flag("--dimension-weighted", cfg.dimension_weighted,
                "Draw the edge size uniformly before the edge");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph subdivision and embedded homology"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string ring = "z";

  auto* closure = app.add_subcommand("closure", "Simplicial closure of a hypergraph");
  add_io(closure, cfg);

  auto* subdivide = app.add_subcommand("subdivide", "Iterated subdivision with provenance");
  add_io(subdivide, cfg);
  subdivide->add_option("-k,--iterations", cfg.iterations, "Number of rounds")->check(CLI::NonNegativeNumber);
  subdivide->add_option("--cap", cfg.edge_cap, "Abort past this many edges per round")->check(CLI::PositiveNumber);

  auto* homology = app.add_subcommand("homology", "Embedded homology");
  add_io(homology, cfg);
  homology->add_option("--ring", ring, "z, q or gf<p>");

  auto* verify = app.add_subcommand("verify", "Check that subdivision preserves embedded homology");
  add_io(verify, cfg);
  verify->add_option("--ring", ring, "z, q or gf<p>");
  verify->add_option("--random", cfg.random_instances, "Verify this many random instances instead");
  add_generator(verify, cfg);

  auto* random = app.add_subcommand("random", "Random hypergraph");
  random->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
  add_generator(random, cfg);

  auto* stats = app.add_subcommand("stats", "Edge counts per dimension for each round, as CSV");
  add_io(stats, cfg);
  stats->add_option("-k,--iterations", cfg.iterations, "Number of rounds")->check(CLI::NonNegativeNumber);
  stats->add_option("--cap", cfg.edge_cap, "Abort past this many edges per round")->check(CLI::PositiveNumber);
  stats->add_flag("--timing", cfg.timing, "Fill the wall_ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : hsd::cli::kUsageError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    cfg.ring = hsd::CoefficientRing::parse(ring);
  } catch (const std::invalid_argument& e) {
    std::cerr << "hsd: " << e.what() << '\n';
    return hsd::cli::kUsageError;
  }

  std::string input;
  if (hsd::cli::needs_input(cfg) && !read_all(cfg.input, input)) {
    std::cerr << "hsd: cannot read " << *cfg.input << '\n';
    return hsd::cli::kUsageError;
  }

  const hsd::cli::CommandOutput result = hsd::cli::run(cfg, input);
  if (!result.err.empty()) std::cerr << "hsd: " << result.err;
  if (cfg.output) {
    std::ofstream out(*cfg.output, std::ios::binary);
    out << result.out;
    if (!out) {
      std::cerr << "hsd: cannot write " << *cfg.output << '\n';
      return hsd::cli::kUsageError;
    }
  } else {
    std::cout << result.out;
  }
  return result.exit_code;
}
