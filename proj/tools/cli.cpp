#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "hsd/invariance.hpp"
#include "hsd/io.hpp"
#include "hsd/random.hpp"
#include "hsd/subdivision.hpp"

namespace hsd::cli {

namespace {

CommandOutput fail(int code, std::string message) {
  return CommandOutput{code, {}, std::move(message) + "\n"};
}

std::string cap_message(const EdgeCapExceeded& e) {
  return "edge cap of " + std::to_string(e.cap) + " exceeded after " +
         std::to_string(e.rounds_completed) + " completed round(s)";
}

CommandOutput cmd_closure(const Hypergraph& h) {
  return {kOk, hypergraph_to_json(simplicial_closure(h).hypergraph()), {}};
}

CommandOutput cmd_subdivide(const RunConfig& cfg, const Hypergraph& h) {
  if (cfg.iterations == 0) return {kOk, hypergraph_to_json(h), {}};
  try {
    return {kOk, subdivision_to_json(iterate_subdivision(h, cfg.iterations, {cfg.edge_cap})), {}};
  } catch (const EdgeCapExceeded& e) {
    CommandOutput out{kCapExceeded, {}, cap_message(e) + "\n"};
    if (e.partial) out.out = subdivision_to_json(*e.partial);
    return out;
  }
}

CommandOutput cmd_homology(const RunConfig& cfg, const Hypergraph& h) {
  return {kOk, homology_to_json(cfg.ring, embedded_homology(h, cfg.ring)), {}};
}

std::string failed_checks(const InvarianceReport& r) {
  std::string out;
  for (const NamedCheck& c : r.checks) {
    if (c.pass) continue;
    if (!out.empty()) out += ';';
    out += c.name;
  }
  return out.empty() ? "-" : out;
}

CommandOutput cmd_verify_random(const RunConfig& cfg) {
  std::ostringstream table;
  table << "instance,seed,vertices,edges,pass,failed\n";
  std::size_t passed = 0;
  for (std::size_t i = 0; i < cfg.random_instances; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    const Hypergraph h = random_hypergraph(
        {cfg.vertices, cfg.edges, seed, cfg.dimension_weighted, cfg.allow_isolated});
    const InvarianceReport r = verify_invariance(h, cfg.ring);
    passed += r.all_pass() ? 1 : 0;
    table << i << ',' << seed << ',' << h.vertex_count() << ',' << h.edge_count() << ','
          << (r.all_pass() ? "true" : "false") << ',' << failed_checks(r) << '\n';
  }
  table << "passed " << passed << '/' << cfg.random_instances << '\n';
  return {passed == cfg.random_instances ? kOk : kCheckFailed, table.str(), {}};
}

CommandOutput cmd_verify(const RunConfig& cfg, const Hypergraph& h) {
  const InvarianceReport r = verify_invariance(h, cfg.ring);
  return {r.all_pass() ? kOk : kCheckFailed, report_to_json(r), {}};
}

CommandOutput cmd_random(const RunConfig& cfg) {
  return {kOk,
          hypergraph_to_json(random_hypergraph(
              {cfg.vertices, cfg.edges, cfg.seed, cfg.dimension_weighted, cfg.allow_isolated})),
          {}};
}

CommandOutput cmd_stats(const RunConfig& cfg, const Hypergraph& h) {
  std::ostringstream csv;
  csv << "iteration,dim,edge_count,wall_ms,status\n";
  auto ms = [&](double v) {
    if (!cfg.timing) return std::string("NA");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  auto rows = [&](int round, const Hypergraph& g, double wall) {
    for (int d = 0; d <= g.max_dim(); ++d)
      csv << round << ',' << d << ',' << g.edge_count(d) << ',' << ms(wall) << ",ok\n";
  };

  rows(0, h, 0.0);
  Hypergraph current = h;
  for (int round = 1; round <= cfg.iterations; ++round) {
    const auto start = std::chrono::steady_clock::now();
    try {
      SubdivisionResult next = subdivide(current, {cfg.edge_cap});
      const std::chrono::duration<double, std::milli> wall = std::chrono::steady_clock::now() - start;
      current = std::move(next.hypergraph);
      rows(round, current, wall.count());
    } catch (const EdgeCapExceeded& e) {
      csv << round << ",NA,NA,NA,cap_exceeded\n";
      return {kCapExceeded, csv.str(),
              "edge cap of " + std::to_string(e.cap) + " exceeded in round " +
                  std::to_string(round) + "\n"};
    }
  }
  return {kOk, csv.str(), {}};
}

}  // namespace

bool needs_input(const RunConfig& cfg) {
  if (cfg.command == "random") return false;
  if (cfg.command == "verify" && cfg.random_instances > 0) return false;
  return true;
}

CommandOutput run(const RunConfig& cfg, const std::string& input) {
  if (cfg.iterations < 0) return fail(kUsageError, "iterations must be nonnegative");
  if (cfg.edge_cap == 0) return fail(kUsageError, "edge cap must be positive");
  try {
    if (cfg.command == "random") return cmd_random(cfg);
    if (cfg.command == "verify" && cfg.random_instances > 0) return cmd_verify_random(cfg);

    const Hypergraph h = parse_hypergraph(input);
    if (cfg.command == "closure") return cmd_closure(h);
    if (cfg.command == "subdivide") return cmd_subdivide(cfg, h);
    if (cfg.command == "homology") return cmd_homology(cfg, h);
    if (cfg.command == "verify") return cmd_verify(cfg, h);
    if (cfg.command == "stats") return cmd_stats(cfg, h);
    return fail(kUsageError, "unknown command '" + cfg.command + "'");
  } catch (const ParseError& e) {
    return fail(kUsageError, std::string("parse error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kUsageError, e.what());
  }
}

}  // namespace hsd::cli
