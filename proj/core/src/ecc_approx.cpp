#include "hyperecc/ecc_approx.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperecc {

std::string_view to_string(TreeVariant variant) {
  switch (variant) {
    case TreeVariant::kT1: return "T1";
    case TreeVariant::kT2: return "T2";
    case TreeVariant::kT3: return "T3";
  }
  return "?";
}

std::string_view to_string(EccStrategy strategy) {
  return strategy == EccStrategy::kLinear ? "linear" : "refined";
}

VertexId furthest_vertex(const BfsLayering& layering) {
  const Distance depth = layering.depth();
  for (VertexId v = 0; v < layering.height.size(); ++v) {
    if (layering.height[v] == depth) return v;
  }
  return layering.source;
}

VertexId furthest_vertex(const Graph& g, VertexId u) { return furthest_vertex(bfs(g, u)); }

namespace {

struct PairSearch {
  MutualPair pair;
  BfsLayering from_u;
};

PairSearch search_mutual_pair(const Graph& g, VertexId start) {
  PairSearch result;
  MutualPair& pair = result.pair;

  BfsLayering previous = bfs(g, start);
  VertexId current = furthest_vertex(previous);
  pair.scans = 1;
  pair.trace.push_back(current);
  pair.trace_distances.push_back(previous.depth());

  for (std::size_t i = 1;; ++i) {
    BfsLayering layering = bfs(g, current);
    const VertexId next = furthest_vertex(layering);
    ++pair.scans;
    pair.trace.push_back(next);
    pair.trace_distances.push_back(layering.depth());
    const Distance forward = layering.depth();
    const Distance backward = pair.trace_distances[i - 1];
    if (i >= 2 && forward <= backward) {
      pair.u = pair.trace[i - 2];
      pair.v = current;
      pair.distance = backward;
      result.from_u = std::move(previous);
      return result;
    }
    previous = std::move(layering);
    current = next;
  }
}

}  // namespace

MutualPair mutually_distant_pair(const Graph& g, VertexId start) {
  return search_mutual_pair(g, start).pair;
}

GeodesicPath geodesic_from_layering(const BfsLayering& layering, VertexId v) {
  GeodesicPath path;
  path.vertices.resize(static_cast<std::size_t>(layering.height[v]) + 1);
  for (auto it = path.vertices.rbegin(); it != path.vertices.rend(); ++it) {
    *it = v;
    v = layering.parent[v];
  }
  return path;
}

GeodesicPath extract_geodesic(const Graph& g, VertexId u, VertexId v) {
  return geodesic_from_layering(bfs(g, u), v);
}

VertexId middle_vertex(const GeodesicPath& path) {
  const Distance d = path.length();
  return path.vertices.at(d / 2);
}

SpanningTree bfs_tree(const Graph& g, VertexId root) {
  SpanningTree tree;
  tree.root = root;
  tree.parent = bfs(g, root).parent;
  return tree;
}

Graph SpanningTree::as_graph() const {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(parent.size());
  for (VertexId v = 0; v < parent.size(); ++v) {
    if (parent[v] != kNoVertex) edges.emplace_back(v, parent[v]);
  }
  return Graph::from_edges(n(), edges);
}

Distance SpanningTree::tree_diam() const {
  if (tree_center.size() == 2) return 2 * tree_rad - 1;
  return 2 * tree_rad;
}

void tree_eccentricities(SpanningTree& tree) {
  const Graph t = tree.as_graph();
  const VertexId a = furthest_vertex(t, tree.root);
  const BfsLayering from_a = bfs(t, a);
  const VertexId b = furthest_vertex(from_a);
  const GeodesicPath diametral = geodesic_from_layering(from_a, b);
  const Distance d = diametral.length();

  tree.tree_rad = (d + 1) / 2;
  tree.tree_center.clear();
  tree.tree_center.push_back(diametral.vertices[d / 2]);
  if (d % 2 == 1) {
    tree.tree_center.push_back(diametral.vertices[d / 2 + 1]);
    std::sort(tree.tree_center.begin(), tree.tree_center.end());
  }

  BfsWorkspace ws(t.n());
  const auto dist = ws.run(t, tree.tree_center);
  tree.tree_ecc.resize(t.n());
  for (VertexId v = 0; v < t.n(); ++v) tree.tree_ecc[v] = dist[v] + tree.tree_rad;
}

ApproxTree build_approx_tree(const Graph& g, TreeVariant variant, const EccentricityProfile* oracle,
                             VertexId start) {
  ApproxTree result;
  result.variant = variant;
  RootSelection& sel = result.selection;

  switch (variant) {
    case TreeVariant::kT1: {
      PairSearch search = search_mutual_pair(g, start);
      const GeodesicPath path = geodesic_from_layering(search.from_u, search.pair.v);
      sel.root = middle_vertex(path);
      sel.first = search.pair.u;
      sel.second = search.pair.v;
      sel.endpoint_distance = search.pair.distance;
      sel.scans = search.pair.scans;
      sel.pair = std::move(search.pair);
      break;
    }
    case TreeVariant::kT2: {
      if (oracle == nullptr) throw std::invalid_argument("T2 requires exact profile");
      const VertexId v = furthest_vertex(g, start);
      const BfsLayering from_v = bfs(g, v);
      const VertexId t = furthest_vertex(from_v);
      const GeodesicPath path = geodesic_from_layering(from_v, t);
      sel.root = path.vertices.at(std::min(oracle->rad, path.length()));
      sel.first = v;
      sel.second = t;
      sel.endpoint_distance = path.length();
      sel.scans = 2;
      break;
    }
    case TreeVariant::kT3: {
      if (oracle == nullptr || oracle->center.empty()) {
        throw std::invalid_argument("T3 requires exact profile");
      }
      sel.root = oracle->center.front();
      break;
    }
  }
  result.tree = bfs_tree(g, sel.root);
  tree_eccentricities(result.tree);
  return result;
}

EccEstimate estimate_eccentricities(const Graph& g, EccStrategy strategy, VertexId start) {
  EccEstimate est;
  est.variant = std::string(to_string(strategy));
  if (strategy == EccStrategy::kRefined) {
    ApproxTree t1 = build_approx_tree(g, TreeVariant::kT1, nullptr, start);
    est.selection = std::move(t1.selection);
    est.estimate = std::move(t1.tree.tree_ecc);
  } else {
    RootSelection& sel = est.selection;
    const VertexId v = furthest_vertex(g, start);
    const BfsLayering from_v = bfs(g, v);
    const VertexId t = furthest_vertex(from_v);
    const GeodesicPath path = geodesic_from_layering(from_v, t);
    sel.root = middle_vertex(path);
    sel.first = v;
    sel.second = t;
    sel.endpoint_distance = path.length();
    sel.scans = 2;
    SpanningTree tree = bfs_tree(g, sel.root);
    tree_eccentricities(tree);
    est.estimate = std::move(tree.tree_ecc);
  }
  // Root selection scans, the BFS building the tree, and three tree sweeps.
  est.passes = est.selection.scans + 1 + 3;
  return est;
}

Distortion measure_distortion(std::span<const Distance> estimate, std::span<const Distance> exact) {
  Distortion d;
  d.k.resize(estimate.size());
  std::int64_t sum = 0;
  for (std::size_t v = 0; v < estimate.size(); ++v) {
    const std::int64_t k = static_cast<std::int64_t>(estimate[v]) - exact[v];
    d.k[v] = k;
    sum += k;
    d.k_max = v == 0 ? k : std::max(d.k_max, k);
    if (k >= 0) {
      if (d.histogram.size() <= static_cast<std::size_t>(k)) d.histogram.resize(static_cast<std::size_t>(k) + 1, 0);
      ++d.histogram[static_cast<std::size_t>(k)];
    }
  }
  d.k_avg = estimate.empty() ? 0.0 : static_cast<double>(sum) / static_cast<double>(estimate.size());
  return d;
}

}  // namespace hyperecc
