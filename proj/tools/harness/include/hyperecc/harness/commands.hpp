#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperecc/graph.hpp"
#include "hyperecc/harness/generator_spec.hpp"
#include "hyperecc/harness/report.hpp"

namespace hyperecc::harness {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitBudget = 3 };

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunConfig {
  std::optional<std::string> input;
  std::optional<std::string> gen;
  std::optional<VertexId> root;
  VertexId start = 0;
  std::optional<Distance> delta;
  std::optional<Distance> rho;
  std::optional<std::size_t> sample;
  std::uint64_t seed = kDefaultSeed;
  /// Edge-visit budget of the all-sources oracle.
  std::uint64_t budget = 5'000'000'000ULL;
  bool force = false;
  std::optional<std::string> out;
  bool inject_fault = false;
  unsigned threads = 0;
};

struct CommandResult {
  ReportTable table;
  int exit_code = kExitOk;
};

/// Reads --input (reduced to its largest component, with a warning on `log`)
/// or expands --gen. Throws ParseError / std::invalid_argument on bad input.
std::vector<NamedGraph> load_input(const RunConfig& config, std::ostream& log);

CommandResult cmd_stats(const std::vector<NamedGraph>& graphs, const RunConfig& config, std::ostream& log);
CommandResult cmd_tree_experiment(const std::vector<NamedGraph>& graphs, const RunConfig& config,
                                  std::ostream& log);
CommandResult cmd_distance_experiment(const std::vector<NamedGraph>& graphs, const RunConfig& config,
                                      std::ostream& log);
CommandResult cmd_verify(const std::vector<NamedGraph>& graphs, const RunConfig& config, std::ostream& log);
CommandResult cmd_hyperbolicity(const std::vector<NamedGraph>& graphs, const RunConfig& config,
                                std::ostream& log);

}  // namespace hyperecc::harness
