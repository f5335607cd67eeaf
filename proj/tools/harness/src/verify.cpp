#include "hyperecc/harness/verify.hpp"

#include <algorithm>
#include <sstream>

#include "hyperecc/dist_approx.hpp"
#include "hyperecc/ecc_approx.hpp"
#include "hyperecc/exact.hpp"
#include "hyperecc/hyperbolicity.hpp"

namespace hyperecc::harness {

std::size_t VerifyResult::count(const std::string& prefix) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(), [&](const Violation& v) {
    return v.check.compare(0, prefix.size(), prefix) == 0;
  }));
}

namespace {

using I64 = std::int64_t;

class Checker {
 public:
  Checker(const NamedGraph& input, VerifyResult& result, VerifySummary& summary)
      : input_(input), result_(result), summary_(summary) {}

  // Records one check; `describe` only runs on failure.
  template <typename Describe>
  bool expect(bool ok, const char* check, Describe&& describe) {
    ++summary_.checks;
    ++result_.checks;
    if (!ok) {
      std::ostringstream detail;
      describe(detail);
      result_.violations.push_back({input_.name, check, detail.str()});
    }
    return ok;
  }

  std::string v(VertexId id) const { return input_.graph.label(id); }

 private:
  const NamedGraph& input_;
  VerifyResult& result_;
  VerifySummary& summary_;
};

void check_tree(Checker& ck, const Graph& g, const DistanceMatrix& d, const SpanningTree& t,
                const char* name) {
  const Graph tg = t.as_graph();
  for (VertexId v = 0; v < t.n(); ++v) {
    const VertexId p = t.parent[v];
    if (p == kNoVertex) continue;
    ck.expect(g.has_edge(v, p), "tree.spanning", [&](auto& os) {
      os << name << " parent edge " << ck.v(v) << "-" << ck.v(p) << " is not a graph edge";
    });
  }
  ck.expect(tg.edge_count() + 1 == tg.n() && is_connected(tg), "tree.spanning",
            [&](auto& os) { os << name << " parent array is not a spanning tree"; });

  BfsWorkspace ws(tg.n());
  {
    const auto from_root = ws.run(tg, t.root);
    for (VertexId v = 0; v < tg.n(); ++v) {
      ck.expect(from_root[v] == d(v, t.root), "tree.bfs_property", [&](auto& os) {
        os << name << " d_T(" << ck.v(v) << ",root)=" << from_root[v] << " but d_G=" << d(v, t.root);
      });
    }
  }

  ck.expect(t.tree_center.size() == 1 || (t.tree_center.size() == 2 && tg.has_edge(t.tree_center[0], t.tree_center[1])),
            "tree.center_shape", [&](auto& os) { os << name << " tree center has " << t.tree_center.size() << " vertices"; });

  // Brute force: one BFS per vertex over the tree edges.
  Distance brute_rad = kUnreached;
  for (VertexId v = 0; v < tg.n(); ++v) {
    const auto dist = ws.run(tg, v);
    const Distance ecc_t = dist[ws.visited().back()];
    brute_rad = std::min(brute_rad, ecc_t);
    ck.expect(t.tree_ecc[v] == ecc_t, "tree.ecc_equiv", [&](auto& os) {
      os << name << " tree_eccentricities(" << ck.v(v) << ")=" << t.tree_ecc[v] << ", brute force " << ecc_t;
    });
    const Distance ecc_g = *std::max_element(d.row(v).begin(), d.row(v).end());
    ck.expect(ecc_g <= t.tree_ecc[v], "tree.ecc_lower", [&](auto& os) {
      os << name << " ecc_T(" << ck.v(v) << ")=" << t.tree_ecc[v] << " < ecc_G=" << ecc_g;
    });
  }
  ck.expect(brute_rad == t.tree_rad, "tree.ecc_equiv",
            [&](auto& os) { os << name << " rad(T)=" << t.tree_rad << ", brute force " << brute_rad; });
}

void check_upper(Checker& ck, std::span<const Distance> estimate, const EccentricityProfile& p, I64 slack,
                 const char* check, const char* name) {
  for (VertexId x = 0; x < estimate.size(); ++x) {
    const I64 e = p.ecc[x];
    ck.expect(e <= I64{estimate[x]} && I64{estimate[x]} <= e + slack, check, [&](auto& os) {
      os << name << " estimate(" << ck.v(x) << ")=" << estimate[x] << " outside [" << e << ", " << e + slack << "]";
    });
  }
}

void check_exact_oracle(Checker& ck, const Graph& g, const DistanceMatrix& d, const EccentricityProfile& p,
                        const VerifyOptions& options, I64 tau) {
  const VertexId n = g.n();
  const auto via_bfs = all_eccentricities(g, {.force = true, .threads = options.threads});
  ck.expect(via_bfs.ecc == p.ecc, "oracle.routes_agree",
            [&](auto& os) { os << "all_eccentricities disagrees with the distance matrix"; });

  ck.expect(!p.center.empty(), "oracle.center_nonempty", [&](auto& os) { os << "empty center"; });
  ck.expect(p.diam <= 2 * p.rad, "oracle.diam_le_2rad",
            [&](auto& os) { os << "diam=" << p.diam << " > 2*rad=" << 2 * p.rad; });
  std::size_t layered = 0;
  for (std::size_t k = 0; k < p.layers.size(); ++k) {
    layered += p.layers[k].size();
    for (VertexId x : p.layers[k]) {
      ck.expect(p.ecc[x] == p.rad + k, "oracle.layers", [&](auto& os) { os << ck.v(x) << " in wrong layer " << k; });
    }
    const I64 layer_diam = set_diameter(g, p.layers[k]);
    ck.expect(layer_diam <= 2 * I64(k) + 2 * tau + 1, "oracle.layer_diameter", [&](auto& os) {
      os << "diam(C^" << k << ")=" << layer_diam << " > " << 2 * I64(k) + 2 * tau + 1;
    });
  }
  ck.expect(layered == n, "oracle.layers", [&](auto& os) { os << "layers cover " << layered << " of " << n; });

  const CenterGeometry geo = center_geometry(g, p);
  ck.expect(geo.center_diam <= p.diam, "oracle.center_diam",
            [&](auto& os) { os << "center_diam=" << geo.center_diam << " > diam=" << p.diam; });
  for (VertexId x = 0; x < n; ++x) {
    Distance nearest = kUnreached;
    for (VertexId c : p.center) nearest = std::min(nearest, d(x, c));
    ck.expect(geo.dist_to_center[x] == nearest, "oracle.dist_to_center", [&](auto& os) {
      os << "d(" << ck.v(x) << ",C)=" << geo.dist_to_center[x] << ", brute force " << nearest;
    });
    const I64 dc = nearest;
    const I64 ecc = p.ecc[x];
    ck.expect(dc + p.rad - 4 * tau - 2 <= ecc && ecc <= dc + p.rad, "oracle.center_distance", [&](auto& os) {
      os << "ecc(" << ck.v(x) << ")=" << ecc << " outside [" << dc + p.rad - 4 * tau - 2 << ", " << dc + p.rad << "]";
    });

    const auto row = d.row(x);
    std::vector<VertexId> brute;
    for (VertexId y = 0; y < n; ++y) {
      if (row[y] == p.ecc[x]) brute.push_back(y);
    }
    ck.expect(furthest_set(g, x) == brute, "oracle.furthest_set",
              [&](auto& os) { os << "furthest_set(" << ck.v(x) << ") differs from the APSP argmax"; });
  }
}

void check_hyperbolicity(Checker& ck, const NamedGraph& input, const DistanceMatrix& d,
                         const HyperbolicityReport& h) {
  const VertexId n = d.n();
  if (n >= 4) {
    const auto& w = h.witness;
    ck.expect(quadruple_delta(d, w[0], w[1], w[2], w[3]) == h.delta4, "hyper.witness",
              [&](auto& os) { os << "witness does not reproduce delta4=" << h.delta4.to_string(); });
  }
  ck.expect(h.thinness_bound == h.delta4 * 4, "hyper.thinness",
            [&](auto& os) { os << "thinness bound is not 4*delta4"; });
  std::vector<VertexId> half;
  for (VertexId v = 0; v < n; v += 2) half.push_back(v);
  const auto restricted = four_point_delta(d, half);
  ck.expect(restricted.delta4 <= h.delta4, "hyper.restriction",
            [&](auto& os) { os << "restricted delta4 " << restricted.delta4.to_string() << " exceeds graph value"; });
  if (input.name.rfind("block:", 0) == 0) {
    ck.expect(h.delta4 <= HalfInt::from_int(1), "hyper.block_graph",
              [&](auto& os) { os << "block graph delta4=" << h.delta4.to_string(); });
  }
}

void check_ecc_approx(Checker& ck, const Graph& g, const DistanceMatrix& d, const EccentricityProfile& p, I64 tau,
                      bool tree_input) {
  const VertexId n = g.n();
  const I64 rad = p.rad;

  for (VertexId u = 0; u < n; ++u) {
    const VertexId fv = furthest_vertex(g, u);
    const auto row = d.row(u);
    const auto lowest = static_cast<VertexId>(std::find(row.begin(), row.end(), p.ecc[u]) - row.begin());
    ck.expect(fv == lowest, "ecc.furthest_vertex",
              [&](auto& os) { os << "furthest_vertex(" << ck.v(u) << ")=" << ck.v(fv) << ", expected " << ck.v(lowest); });
    ck.expect(I64{p.ecc[fv]} >= I64{p.diam} - 2 * tau, "ecc.furthest_ecc",
              [&](auto& os) { os << "ecc(" << ck.v(fv) << ")=" << p.ecc[fv] << " < diam-2tau"; });
  }

  const MutualPair pair = mutually_distant_pair(g, 0);
  const I64 duv = d(pair.u, pair.v);
  ck.expect(p.ecc[pair.u] == pair.distance && p.ecc[pair.v] == pair.distance && duv == pair.distance,
            "ecc.mutual_pair", [&](auto& os) {
              os << "pair (" << ck.v(pair.u) << "," << ck.v(pair.v) << ") ecc " << p.ecc[pair.u] << "/" << p.ecc[pair.v]
                 << " distance " << duv;
            });
  ck.expect(pair.scans == pair.trace.size() && std::is_sorted(pair.trace_distances.begin(), pair.trace_distances.end()),
            "ecc.pair_trace", [&](auto& os) { os << "trace is inconsistent"; });
  ck.expect(I64(pair.scans) <= 2 * tau + 3, "ecc.pair_scans",
            [&](auto& os) { os << pair.scans << " scans > 2tau+3=" << 2 * tau + 3; });
  ck.expect(duv >= 2 * rad - 2 * tau - 1, "ecc.pair_distance",
            [&](auto& os) { os << "d(u,v)=" << duv << " < 2rad-2tau-1=" << 2 * rad - 2 * tau - 1; });

  const GeodesicPath path = extract_geodesic(g, pair.u, pair.v);
  ck.expect(path.length() == duv && path.vertices.front() == pair.u && path.vertices.back() == pair.v, "ecc.geodesic",
            [&](auto& os) { os << "geodesic has length " << path.length(); });
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < path.vertices.size(); ++j) {
      ck.expect(d(path.vertices[i], path.vertices[j]) == j - i, "ecc.geodesic",
                [&](auto& os) { os << "path vertices " << i << "," << j << " are not at distance " << j - i; });
    }
  }
  const VertexId c = middle_vertex(path);
  const I64 half_up = (duv + 1) / 2;
  ck.expect(I64{d(c, pair.v)} == half_up, "ecc.middle_vertex",
            [&](auto& os) { os << "middle vertex " << ck.v(c) << " not at ceil(d/2) from " << ck.v(pair.v); });
  ck.expect(I64{p.ecc[c]} <= half_up + tau && half_up + tau <= rad + tau, "ecc.middle_ecc",
            [&](auto& os) { os << "ecc(c)=" << p.ecc[c] << ", ceil(d/2)+tau=" << half_up + tau << ", rad+tau=" << rad + tau; });
  for (std::size_t k = 0; k < p.layers.size(); ++k) {
    for (VertexId x : p.layers[k]) {
      const I64 dx = d(x, c);
      ck.expect(I64(k) - tau <= dx && dx <= I64(k) + 2 * tau + 1, "ecc.middle_layers", [&](auto& os) {
        os << "x=" << ck.v(x) << " in C^" << k << " has d(x,c)=" << dx;
      });
    }
  }

  const ApproxTree t1 = build_approx_tree(g, TreeVariant::kT1, nullptr, 0);
  ck.expect(t1.selection.root == c, "ecc.t1_root", [&](auto& os) { os << "T1 root " << ck.v(t1.selection.root) << " != " << ck.v(c); });
  check_tree(ck, g, d, t1.tree, "T1");
  check_upper(ck, t1.tree.tree_ecc, p, 3 * tau + 1, "ecc.t1_bound", "T1");

  const ApproxTree t2 = build_approx_tree(g, TreeVariant::kT2, &p, 0);
  const VertexId w = t2.selection.root;
  ck.expect(I64{p.ecc[w]} <= rad + tau, "ecc.t2_root",
            [&](auto& os) { os << "ecc(w)=" << p.ecc[w] << " > rad+tau=" << rad + tau; });
  check_tree(ck, g, d, t2.tree, "T2");
  check_upper(ck, t2.tree.tree_ecc, p, 6 * tau + 1, "ecc.t2_bound", "T2");

  const ApproxTree t3 = build_approx_tree(g, TreeVariant::kT3, &p, 0);
  check_tree(ck, g, d, t3.tree, "T3");

  const EccEstimate linear = estimate_eccentricities(g, EccStrategy::kLinear, 0);
  const VertexId cl = linear.selection.root;
  ck.expect(I64{p.ecc[cl]} <= rad + 3 * tau, "ecc.linear_root",
            [&](auto& os) { os << "ecc(c)=" << p.ecc[cl] << " > rad+3tau=" << rad + 3 * tau; });
  ck.expect(I64{d(cl, linear.selection.second)} == (I64{linear.selection.endpoint_distance} + 1) / 2,
            "ecc.middle_vertex", [&](auto& os) { os << "linear root not at ceil(d(v,t)/2) from t"; });
  for (VertexId x : p.center) {
    ck.expect(I64{d(x, cl)} <= 3 * tau + 1, "ecc.linear_center_ball",
              [&](auto& os) { os << "center vertex " << ck.v(x) << " at distance " << d(x, cl) << " > 3tau+1"; });
  }
  check_upper(ck, linear.estimate, p, 6 * tau + 1, "ecc.linear_bound", "linear");

  const EccEstimate refined = estimate_eccentricities(g, EccStrategy::kRefined, 0);
  ck.expect(refined.estimate == t1.tree.tree_ecc, "ecc.refined_is_t1",
            [&](auto& os) { os << "refined estimate differs from T1 tree eccentricities"; });
  check_upper(ck, refined.estimate, p, 3 * tau + 1, "ecc.refined_bound", "refined");

  if (tree_input) {
    check_upper(ck, linear.estimate, p, 0, "exact_tree.ecc", "linear");
    check_upper(ck, refined.estimate, p, 0, "exact_tree.ecc", "refined");
    check_upper(ck, t2.tree.tree_ecc, p, 0, "exact_tree.ecc", "T2");
    check_upper(ck, t3.tree.tree_ecc, p, 0, "exact_tree.ecc", "T3");
  }
}

void check_distances(Checker& ck, const Graph& g, const DistanceMatrix& d, Distance tau, VertexId root,
                     const VerifyOptions& options, bool inject, bool tree_input) {
  const VertexId n = g.n();
  const Distance lambda = tau;
  const BfsLayering L = bfs(g, root);
  const PowerReach reach = power_reachability(g, lambda);
  const std::string at = " (root " + ck.v(root) + ")";

  DistanceEstimate est;
  SweepOptions validated;
  validated.validate_family = true;
  try {
    est = approximate_all_distances(g, reach, root, validated);
  } catch (const std::logic_error& e) {
    ck.expect(false, "dist.family", [&](auto& os) { os << e.what() << at; });
    est = approximate_all_distances(g, reach, root);
  }
  ck.expect(est.complete() && est.reassigned_pairs() == 0, "dist.assign_once", [&](auto& os) {
    os << est.assigned_pairs() << " pairs assigned, " << est.reassigned_pairs() << " reassigned" << at;
  });

  SweepOptions bitmap;
  bitmap.bitmap_membership = true;
  const auto via_bitmap = approximate_all_distances(g, reach, root, bitmap);
  const auto via_matrix = approximate_all_distances(g, d, lambda, root);
  ck.expect(std::ranges::equal(via_bitmap.packed(), est.packed()) && std::ranges::equal(via_matrix.packed(), est.packed()),
            "dist.membership_equiv", [&](auto& os) { os << "membership strategies disagree" << at; });

  if (inject && n >= 2) {
    const VertexId x = L.order.back();
    const VertexId y = n >= 3 ? L.order[1] == x ? L.order[2] : L.order[1] : L.order[0];
    est.overwrite(x, y, d(x, y) + lambda + 2);
  }

  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const I64 err = I64{est(x, y)} - d(x, y);
      ck.expect(0 <= err && err <= I64{lambda} + 1, "dist.guarantee", [&](auto& os) {
        os << "pair (" << ck.v(x) << "," << ck.v(y) << ") d=" << d(x, y) << " estimate=" << est(x, y)
           << " error " << err << " outside [0," << lambda + 1 << "]" << at;
      });
      const Distance k = separation_level(L, reach, x, y);
      const Distance closed = closed_form_estimate(L, k, lambda, x, y);
      ck.expect(closed == est(x, y), "dist.sweep_equiv", [&](auto& os) {
        os << "pair (" << ck.v(x) << "," << ck.v(y) << ") sweep " << est(x, y) << " vs closed form " << closed << at;
      });
      const DistanceBounds b = distance_sandwich(L, d, x, y, lambda);
      ck.expect(b.lower <= I64{d(x, y)} && I64{d(x, y)} <= b.upper, "dist.sandwich", [&](auto& os) {
        os << "pair (" << ck.v(x) << "," << ck.v(y) << ") d=" << d(x, y) << " outside [" << b.lower << "," << b.upper << "]" << at;
      });
    }
    if (x != root) {
      ck.expect(est(x, root) == L.height[x], "dist.root_row",
                [&](auto& os) { os << "estimate(" << ck.v(x) << ",root)=" << est(x, root) << " != h=" << L.height[x]; });
    }
  }
  const ErrorStats stats = error_stats(est, d);
  ck.expect(stats.avg_error <= static_cast<double>(stats.max_error), "dist.avg_le_max",
            [&](auto& os) { os << "avg " << stats.avg_error << " > max " << stats.max_error; });

  // Estimator variant with the synthetic (2,1) estimator and rho = tau.
  const Distance rho = tau;
  const DoublingEstimator doubling(d);
  const auto est2 = approximate_all_distances_estimated(g, rho, doubling, root);
  const ExactEstimator exact(d);
  const auto est1 = approximate_all_distances_estimated(g, rho, exact, root);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const I64 err2 = I64{est2(x, y)} - d(x, y);
      ck.expect(0 <= err2 && err2 <= 2 * I64{rho} + 2, "est.guarantee", [&](auto& os) {
        os << "(2,1) estimator pair (" << ck.v(x) << "," << ck.v(y) << ") error " << err2 << at;
      });
      const I64 err1 = I64{est1(x, y)} - d(x, y);
      ck.expect(0 <= err1 && err1 <= 2 * I64{rho} + 2, "est.guarantee", [&](auto& os) {
        os << "exact estimator pair (" << ck.v(x) << "," << ck.v(y) << ") error " << err1 << at;
      });
      const Distance k = separation_level(L, doubling, x, y, 2 * rho + 1);
      ck.expect(closed_form_estimate(L, k, 2 * rho + 1, x, y) == est2(x, y), "est.sweep_equiv", [&](auto& os) {
        os << "pair (" << ck.v(x) << "," << ck.v(y) << ") estimator sweep disagrees with closed form" << at;
      });
    }
  }

  if (tree_input) {
    const auto exact_tree = approximate_all_distances(g, reach.lambda() == 0 ? reach : power_reachability(g, 0), root);
    const ErrorStats ts = error_stats(exact_tree, d);
    ck.expect(ts.max_error == 0 && ts.min_error == 0, "exact_tree.distances",
              [&](auto& os) { os << "tree with lambda=0 has max error " << ts.max_error << at; });
  }
  (void)options;
}

}  // namespace

void verify_graph(const NamedGraph& input, const VerifyOptions& options, VerifyResult& result) {
  const Graph& g = input.graph;
  VerifySummary summary;
  summary.graph = input.name;
  summary.n = g.n();
  Checker ck(input, result, summary);

  if (!ck.expect(g.n() > 0 && is_connected(g), "input.connected", [&](auto& os) { os << "graph is empty or disconnected"; })) {
    result.graphs.push_back(summary);
    return;
  }
  if (g.n() > options.max_vertices) {
    throw BudgetError(input.name + ": verify is limited to " + std::to_string(options.max_vertices) + " vertices");
  }
  const bool tree_input = is_tree(g);
  summary.tree = tree_input;

  const DistanceMatrix d = all_pairs_distances(g, {.force = true, .threads = options.threads});
  const EccentricityProfile p = eccentricities_from_matrix(d);
  const HyperbolicityReport h = four_point_delta(d, {.force = true, .threads = options.threads});
  const Distance tau = h.tau();
  summary.tau = tau;

  check_hyperbolicity(ck, input, d, h);
  if (tree_input) {
    ck.expect(h.delta4 == HalfInt{}, "exact_tree.delta4", [&](auto& os) { os << "tree has delta4=" << h.delta4.to_string(); });
  }
  check_exact_oracle(ck, g, d, p, options, tau);
  check_ecc_approx(ck, g, d, p, tau, tree_input);

  const VertexId center_root = build_approx_tree(g, TreeVariant::kT1).selection.root;
  std::vector<VertexId> roots{center_root, 0, g.n() - 1};
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  bool inject = options.inject_fault;
  for (VertexId root : roots) {
    check_distances(ck, g, d, tau, root, options, inject, tree_input);
    inject = false;
  }

  const AdmissibleDelta adm = smallest_admissible_delta(g, center_root, d);
  ck.expect(adm.max_error <= I64{adm.delta} + 1 && adm.delta <= p.diam, "dist.admissible",
            [&](auto& os) { os << "admissible delta " << adm.delta << " has max error " << adm.max_error; });
  if (tree_input) {
    ck.expect(adm.delta == 0 && adm.max_error == 0, "exact_tree.admissible",
              [&](auto& os) { os << "tree admissible delta " << adm.delta << " max error " << adm.max_error; });
  }
  result.graphs.push_back(summary);
}

VerifyResult verify_all(const std::vector<NamedGraph>& graphs, const VerifyOptions& options) {
  VerifyResult result;
  for (const auto& g : graphs) verify_graph(g, options, result);
  return result;
}

}  // namespace hyperecc::harness
