// hyperecc: eccentricity and distance approximation experiments on
// unweighted graphs. Tables go to stdout as TSV (aligned with --pretty);
// warnings and summaries go to stderr.

#include <CLI11.hpp>

#include <iostream>

#include "hyperecc/exact.hpp"
#include "hyperecc/graph_io.hpp"
#include "hyperecc/harness/commands.hpp"

namespace {

using namespace hyperecc;
using namespace hyperecc::harness;

using Command = CommandResult (*)(const std::vector<NamedGraph>&, const RunConfig&, std::ostream&);

constexpr const char* kGenHelp =
    "generate the input instead of reading it: path:N cycle:N grid:RxC star:L complete:N tree:N "
    "random:N:P sparse:N:EXTRA block:BLOCKS:MAXSIZE, random-batch:COUNT:NMIN:NMAX, or 'suite' "
    "(the property suite)";

bool given(CLI::App* cmd, const char* name) {
  const CLI::Option* opt = cmd->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eccentricity and distance approximation via BFS trees"};
  app.require_subcommand(1);
  app.footer(
      "Random generators are seeded with --seed (default " + std::to_string(kDefaultSeed) +
      "); the same command and seed always print the same table.\n"
      "Exit codes: 0 ok, 1 invariant violation, 2 usage or parse error, 3 budget refusal.");

  RunConfig config;
  bool pretty = false;
  std::uint64_t root = 0;
  std::uint64_t delta = 0;
  std::uint64_t rho = 0;
  std::size_t sample = 0;

  struct Sub {
    const char* name;
    const char* help;
    Command run;
  };
  const Sub subs[] = {
      {"stats", "n, m, center, radius, diameter and four-point hyperbolicity", cmd_stats},
      {"trees", "compare the T1/T2/T3 eccentricity-approximating BFS trees", cmd_tree_experiment},
      {"distances", "additive distance estimates: smallest admissible delta and its errors", cmd_distance_experiment},
      {"verify", "check every bound and oracle equivalence; exit 1 on any violation", cmd_verify},
      {"hyperbolicity", "four-point delta with a witness quadruple", cmd_hyperbolicity},
  };

  std::vector<std::pair<CLI::App*, Command>> commands;
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    auto* input = cmd->add_option("--input", config.input, "edge list file (.gz accepted)");
    auto* gen = cmd->add_option("--gen", config.gen, kGenHelp);
    input->excludes(gen);
    cmd->add_option("--seed", config.seed, "seed for random generators and sampling");
    cmd->add_option("--start", config.start, "start vertex of the furthest-point scans")->capture_default_str();
    cmd->add_option("--budget", config.budget, "edge-visit budget of the all-sources BFS oracle")->capture_default_str();
    cmd->add_flag("--force", config.force, "ignore the oracle and enumeration budgets");
    cmd->add_option("--threads", config.threads, "worker threads (0 = all cores)");
    cmd->add_flag("--pretty", pretty, "aligned text instead of TSV");
    if (std::string_view(sub.name) == "distances") {
      cmd->add_option("--root", root, "BFS root (default: T1 center)");
      cmd->add_option("--delta", delta, "fixed delta instead of the admissible search");
      cmd->add_option("--rho", rho, "estimator sweep with a (2,1) estimator and this rho");
      cmd->add_option("--sample", sample, "estimate only rows of the K deepest vertices");
      cmd->add_option("--out", config.out, "write the estimate matrix in binary triangular form");
    }
    if (std::string_view(sub.name) == "stats" || std::string_view(sub.name) == "hyperbolicity") {
      cmd->add_option("--sample", sample, "quadruples to sample when exact enumeration is out of budget");
    }
    if (std::string_view(sub.name) == "verify") {
      cmd->add_flag("--inject-fault", config.inject_fault, "corrupt one estimate to exercise the checker");
    }
    commands.emplace_back(cmd, sub.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [cmd, run] : commands) {
    if (!cmd->parsed()) continue;
    if (given(cmd, "--root")) config.root = static_cast<VertexId>(root);
    if (given(cmd, "--delta")) config.delta = static_cast<Distance>(delta);
    if (given(cmd, "--rho")) config.rho = static_cast<Distance>(rho);
    if (given(cmd, "--sample")) config.sample = sample;
    try {
      const auto graphs = load_input(config, std::cerr);
      const CommandResult result = run(graphs, config, std::cerr);
      if (pretty) {
        result.table.write_pretty(std::cout);
      } else {
        result.table.write_tsv(std::cout);
      }
      return result.exit_code;
    } catch (const BudgetError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBudget;
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return kExitUsage;
}
