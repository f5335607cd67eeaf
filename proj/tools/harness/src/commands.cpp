#include "hyperecc/harness/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "hyperecc/dist_approx.hpp"
#include "hyperecc/ecc_approx.hpp"
#include "hyperecc/exact.hpp"
#include "hyperecc/graph_io.hpp"
#include "hyperecc/hyperbolicity.hpp"
#include "hyperecc/harness/verify.hpp"

namespace hyperecc::harness {

namespace {

// Pool and sample sizes for the sampled four-point lower bound.
constexpr VertexId kSampledPool = 1024;
constexpr std::uint64_t kDefaultQuadrupleSamples = 1'000'000;

std::string str(std::uint64_t v) { return std::to_string(v); }

// --root/--start name a vertex by its label; generated graphs label by id.
VertexId resolve_vertex(const Graph& g, std::uint64_t requested, const char* flag) {
  const std::string wanted = std::to_string(requested);
  if (g.has_labels()) {
    const auto& labels = g.labels();
    const auto it = std::find(labels.begin(), labels.end(), wanted);
    if (it != labels.end()) return static_cast<VertexId>(it - labels.begin());
  } else if (requested < g.n()) {
    return static_cast<VertexId>(requested);
  }
  throw std::invalid_argument(std::string(flag) + " " + wanted + " is not a vertex of the graph");
}

OracleOptions oracle_options(const RunConfig& config) {
  return {.edge_visit_budget = config.budget, .force = config.force, .threads = config.threads};
}

VertexId start_vertex(const Graph& g, const RunConfig& config) {
  return resolve_vertex(g, config.start, "--start");
}

VertexId distance_root(const Graph& g, const RunConfig& config) {
  if (config.root) return resolve_vertex(g, *config.root, "--root");
  return build_approx_tree(g, TreeVariant::kT1, nullptr, start_vertex(g, config)).selection.root;
}

HyperbolicityReport sampled_delta(const Graph& g, const RunConfig& config) {
  const std::uint64_t samples = config.sample.value_or(kDefaultQuadrupleSamples);
  return sampled_four_point_delta(g, std::min(g.n(), kSampledPool), samples, config.seed);
}

std::string histogram_cell(const Distortion& distortion, std::size_t n) {
  std::string out;
  for (std::size_t k = 0; k < distortion.histogram.size(); ++k) {
    if (distortion.histogram[k] == 0) continue;
    if (!out.empty()) out += ',';
    out += str(k) + ':' + format_fixed(100.0 * static_cast<double>(distortion.histogram[k]) / static_cast<double>(n), 1);
  }
  return out;
}

void dump_estimate(const DistanceEstimate& est, const RunConfig& config, std::ostream& log) {
  std::ofstream out(*config.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + *config.out + " for writing");
  est.write_binary(out);
  log << "wrote " << est.n() << "-vertex estimate to " << *config.out << "\n";
}

}  // namespace

std::vector<NamedGraph> load_input(const RunConfig& config, std::ostream& log) {
  if (config.input.has_value() == config.gen.has_value()) {
    throw std::invalid_argument("exactly one of --input and --gen is required");
  }
  if (config.gen) return expand_spec(*config.gen, config.seed);

  Graph g = read_edge_list_file(*config.input);
  ComponentExtraction cc = largest_component(g);
  if (cc.component_count > 1) {
    log << "warning: " << *config.input << " has " << cc.component_count
        << " connected components; keeping the largest (" << cc.graph.n() << " of " << g.n() << " vertices)\n";
  }
  return {NamedGraph{*config.input, std::move(cc.graph)}};
}

CommandResult cmd_stats(const std::vector<NamedGraph>& graphs, const RunConfig& config, std::ostream& log) {
  CommandResult result;
  result.table = ReportTable({"graph", "n", "m", "center_size", "avg_degree", "rad", "diam", "center_diam",
                              "center_connected", "delta4"});
  for (const auto& [name, g] : graphs) {
    std::vector<std::string> row{name, str(g.n()), str(g.edge_count()), "-",
                                 format_fixed(2.0 * static_cast<double>(g.edge_count()) / g.n(), 2),
                                 "-", "-", "-", "-", "-"};
    try {
      const EccentricityProfile p = all_eccentricities(g, oracle_options(config));
      const CenterGeometry geo = center_geometry(g, p);
      row[3] = str(p.center.size());
      row[5] = str(p.rad);
      row[6] = str(p.diam);
      row[7] = str(geo.center_diam);
      row[8] = geo.center_connected ? "yes" : "no";
      if (g.n() <= HyperbolicityOptions{}.max_exact_vertices || config.force) {
        const DistanceMatrix d = all_pairs_distances(g, oracle_options(config));
        row[9] = four_point_delta(d, {.force = true, .threads = config.threads}).delta4.to_string();
      } else {
        row[9] = sampled_delta(g, config).delta4.to_string() + "*";
      }
    } catch (const BudgetError& e) {
      log << name << ": " << e.what() << "; exact fields omitted\n";
      row[9] = sampled_delta(g, config).delta4.to_string() + "*";
      result.exit_code = kExitBudget;
    }
    result.table.add_row(std::move(row));
  }
  return result;
}

CommandResult cmd_tree_experiment(const std::vector<NamedGraph>& graphs, const RunConfig& config,
                                  std::ostream& /*log*/) {
  CommandResult result;
  result.table = ReportTable({"graph", "tree", "root", "scans", "d_uv", "2rad-d_uv", "ecc_c-rad", "d_c_center",
                              "center_ball", "diam_T", "k_max", "k_avg", "k_hist"});
  for (const auto& [name, g] : graphs) {
    const EccentricityProfile p = all_eccentricities(g, oracle_options(config));
    const VertexId start = start_vertex(g, config);
    BfsWorkspace ws(g.n());
    for (TreeVariant variant : {TreeVariant::kT1, TreeVariant::kT2, TreeVariant::kT3}) {
      const ApproxTree t = build_approx_tree(g, variant, &p, start);
      const VertexId c = t.selection.root;
      const auto from_c = ws.run(g, c);
      Distance near = kUnreached;
      Distance far = 0;
      for (VertexId x : p.center) {
        near = std::min(near, from_c[x]);
        far = std::max(far, from_c[x]);
      }
      const Distortion k = measure_distortion(t.tree.tree_ecc, p.ecc);
      const bool has_pair = variant != TreeVariant::kT3;
      const auto duv = static_cast<std::int64_t>(t.selection.endpoint_distance);
      result.table.add_row({name, std::string(to_string(variant)), g.label(c), str(t.selection.scans),
                            has_pair ? str(t.selection.endpoint_distance) : "-",
                            has_pair ? std::to_string(2 * static_cast<std::int64_t>(p.rad) - duv) : "-",
                            str(p.ecc[c] - p.rad), str(near), str(far), str(t.tree.tree_diam()), std::to_string(k.k_max),
                            format_fixed(k.k_avg, 3), histogram_cell(k, g.n())});
    }
  }
  return result;
}

CommandResult cmd_distance_experiment(const std::vector<NamedGraph>& graphs, const RunConfig& config,
                                      std::ostream& log) {
  if (config.out && graphs.size() != 1) throw std::invalid_argument("--out needs a single input graph");
  if (config.rho && config.sample) throw std::invalid_argument("--rho cannot be combined with --sample");
  CommandResult result;
  result.table = ReportTable({"graph", "root", "mode", "delta", "delta_max", "delta_avg", "admissible"});
  auto add = [&](const std::string& name, const Graph& g, VertexId root, const char* mode, std::uint64_t delta,
                 std::int64_t max_error, double avg_error, bool admissible) {
    result.table.add_row({name, g.label(root), mode, str(delta), std::to_string(max_error), format_fixed(avg_error, 3),
                          admissible ? "yes" : "no"});
  };

  for (const auto& [name, g] : graphs) {
    const VertexId root = distance_root(g, config);

    if (config.sample) {
      const BfsLayering L = bfs(g, root);
      const auto sources = deepest_vertices(L, *config.sample);
      if (config.delta) {
        const ErrorStats s = error_stats(estimate_rows(g, L, *config.delta, sources));
        add(name, g, root, "sampled*", *config.delta, s.max_error, s.avg_error, s.max_error <= *config.delta + 1);
      } else {
        for (const DeltaRow& r : smallest_admissible_delta_sampled(g, root, sources).rows) {
          add(name, g, root, "sampled*", r.delta, r.max_error, r.avg_error, r.admissible);
        }
      }
      if (config.out) log << "--out ignored in sampled mode\n";
      continue;
    }

    check_oracle_budget(g, oracle_options(config));
    const DistanceMatrix d = all_pairs_distances(g, oracle_options(config));
    if (config.rho) {
      const DoublingEstimator estimator(d);
      const DistanceEstimate est = approximate_all_distances_estimated(g, *config.rho, estimator, root);
      const ErrorStats s = error_stats(est, d);
      add(name, g, root, "estimated", *config.rho, s.max_error, s.avg_error, s.max_error <= 2 * *config.rho + 2);
      if (config.out) dump_estimate(est, config, log);
    } else if (config.delta) {
      const DistanceEstimate est = approximate_all_distances(g, d, *config.delta, root);
      const ErrorStats s = error_stats(est, d);
      add(name, g, root, "exact", *config.delta, s.max_error, s.avg_error, s.max_error <= *config.delta + 1);
      if (config.out) dump_estimate(est, config, log);
    } else {
      const AdmissibleDelta adm = smallest_admissible_delta(g, root, d);
      for (const DeltaRow& r : adm.rows) add(name, g, root, "exact", r.delta, r.max_error, r.avg_error, r.admissible);
      if (config.out) dump_estimate(approximate_all_distances(g, d, adm.delta, root), config, log);
    }
  }
  return result;
}

CommandResult cmd_verify(const std::vector<NamedGraph>& graphs, const RunConfig& config, std::ostream& log) {
  VerifyOptions options;
  options.inject_fault = config.inject_fault;
  options.threads = config.threads;
  if (config.force) options.max_vertices = kNoVertex;
  const VerifyResult verdict = verify_all(graphs, options);

  CommandResult result;
  result.table = ReportTable({"graph", "check", "detail"});
  for (const Violation& v : verdict.violations) result.table.add_row({v.graph, v.check, v.detail});
  log << "verified " << verdict.graphs.size() << " graph(s), " << verdict.checks << " checks, "
      << verdict.violations.size() << " violation(s)\n";
  result.exit_code = verdict.ok() ? kExitOk : kExitViolation;
  return result;
}

CommandResult cmd_hyperbolicity(const std::vector<NamedGraph>& graphs, const RunConfig& config,
                                std::ostream& /*log*/) {
  CommandResult result;
  result.table = ReportTable({"graph", "n", "delta4", "tau", "witness", "exact", "quadruples"});
  for (const auto& [name, g] : graphs) {
    HyperbolicityReport h;
    if (g.n() <= HyperbolicityOptions{}.max_exact_vertices || config.force) {
      const DistanceMatrix d = all_pairs_distances(g, oracle_options(config));
      h = four_point_delta(d, {.force = true, .threads = config.threads});
    } else if (config.sample) {
      h = sampled_delta(g, config);
    } else {
      throw BudgetError(name + ": exact four-point enumeration limited to " +
                        str(HyperbolicityOptions{}.max_exact_vertices) + " vertices; use --force or --sample");
    }
    std::string witness = "-";
    if (h.witness[0] != kNoVertex) {
      witness.clear();
      for (VertexId w : h.witness) witness += (witness.empty() ? "" : ",") + g.label(w);
    }
    result.table.add_row({name, str(g.n()), h.delta4.to_string() + (h.approximate ? "*" : ""), str(h.tau()), witness,
                          h.approximate ? "no" : "yes", str(h.quadruples)});
  }
  return result;
}

}  // namespace hyperecc::harness
