#include "hyperecc/exact.hpp"

#include <algorithm>
#include <string>

#include "parallel.hpp"

namespace hyperecc {

EccentricityProfile EccentricityProfile::from_eccentricities(std::vector<Distance> ecc) {
  EccentricityProfile p;
  p.ecc = std::move(ecc);
  if (p.ecc.empty()) return p;
  const auto [lo, hi] = std::minmax_element(p.ecc.begin(), p.ecc.end());
  p.rad = *lo;
  p.diam = *hi;
  p.layers.resize(p.diam - p.rad + 1);
  for (VertexId v = 0; v < p.ecc.size(); ++v) p.layers[p.ecc[v] - p.rad].push_back(v);
  p.center = p.layers.front();
  return p;
}

void check_oracle_budget(const Graph& g, const OracleOptions& options) {
  const std::uint64_t visits = static_cast<std::uint64_t>(g.n()) * std::max<std::uint64_t>(g.edge_count(), 1);
  if (!options.force && visits > options.edge_visit_budget) {
    throw BudgetError("exact oracle needs " + std::to_string(visits) + " edge visits, budget is " +
                      std::to_string(options.edge_visit_budget) + " (use --force or --budget)");
  }
}

namespace {

void require_connected(std::span<const Distance> dist, std::size_t visited, VertexId n) {
  if (visited != n || dist.size() != n) throw GraphError("graph not connected");
}

}  // namespace

EccentricityProfile all_eccentricities(const Graph& g, const OracleOptions& options) {
  check_oracle_budget(g, options);
  const VertexId n = g.n();
  std::vector<Distance> ecc(n, 0);
  detail::parallel_for(
      n, options.threads, [&] { return BfsWorkspace(n); },
      [&](BfsWorkspace& ws, std::size_t v) {
        const auto dist = ws.run(g, static_cast<VertexId>(v));
        require_connected(dist, ws.visited().size(), n);
        ecc[v] = dist[ws.visited().back()];
      });
  return EccentricityProfile::from_eccentricities(std::move(ecc));
}

DistanceMatrix all_pairs_distances(const Graph& g, const OracleOptions& options) {
  check_oracle_budget(g, options);
  const VertexId n = g.n();
  DistanceMatrix d(n);
  detail::parallel_for(
      n, options.threads, [&] { return BfsWorkspace(n); },
      [&](BfsWorkspace& ws, std::size_t v) {
        const auto dist = ws.run(g, static_cast<VertexId>(v));
        require_connected(dist, ws.visited().size(), n);
        std::copy(dist.begin(), dist.end(), d.row(static_cast<VertexId>(v)).begin());
      });
  return d;
}

EccentricityProfile eccentricities_from_matrix(const DistanceMatrix& d) {
  std::vector<Distance> ecc(d.n(), 0);
  for (VertexId v = 0; v < d.n(); ++v) {
    const auto row = d.row(v);
    ecc[v] = *std::max_element(row.begin(), row.end());
  }
  return EccentricityProfile::from_eccentricities(std::move(ecc));
}

std::vector<VertexId> furthest_set(const Graph& g, VertexId x) {
  BfsWorkspace ws(g.n());
  const auto dist = ws.run(g, x);
  require_connected(dist, ws.visited().size(), g.n());
  const Distance e = dist[ws.visited().back()];
  std::vector<VertexId> result;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (dist[v] == e) result.push_back(v);
  }
  return result;
}

Distance set_diameter(const Graph& g, std::span<const VertexId> vertices) {
  if (vertices.size() < 2) return 0;
  BfsWorkspace ws(g.n());
  Distance best = 0;
  for (VertexId c : vertices) {
    const auto dist = ws.run(g, c);
    for (VertexId other : vertices) best = std::max(best, dist[other]);
  }
  return best;
}

CenterGeometry center_geometry(const Graph& g, const EccentricityProfile& profile) {
  CenterGeometry geo;
  const auto& center = profile.center;
  geo.center_diam = set_diameter(g, center);

  // Connectivity of the subgraph induced on C(G).
  std::vector<char> in_center(g.n(), 0);
  for (VertexId c : center) in_center[c] = 1;
  std::vector<char> seen(g.n(), 0);
  std::vector<VertexId> stack{center.front()};
  seen[center.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    ++reached;
    for (VertexId v : g.neighbors(u)) {
      if (in_center[v] && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  geo.center_connected = reached == center.size();

  BfsWorkspace ws(g.n());
  const auto dist = ws.run(g, center);
  geo.dist_to_center.assign(dist.begin(), dist.end());
  return geo;
}

}  // namespace hyperecc
