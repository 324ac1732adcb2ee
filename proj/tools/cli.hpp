#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hsd/chains.hpp"

namespace hsd::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kCapExceeded = 3,
};

struct RunConfig {
  std::string command;
  std::optional<std::string> input;   // stdin when unset
  std::optional<std::string> output;  // stdout when unset
  CoefficientRing ring = CoefficientRing::integers();
  int iterations = 1;
  std::size_t edge_cap = 1'000'000;
  std::uint64_t seed = 0;
  std::size_t random_instances = 0;
  std::size_t vertices = 5;
  std::size_t edges = 10;
  bool allow_isolated = false;
  bool dimension_weighted = false;
  bool timing = false;
};

struct CommandOutput {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one command on already-read input text. Never throws for bad input;
/// parse and argument errors come back as kUsageError with a message.
CommandOutput run(const RunConfig& cfg, const std::string& input);

/// Whether the command reads a hypergraph from the input.
bool needs_input(const RunConfig& cfg);

}  // namespace hsd::cli
