#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperecc/exact.hpp"
#include "hyperecc/graph.hpp"

namespace hyperecc {

/// Result of repeated furthest-point scans.
///
/// trace holds v1, v2, ..., the furthest vertices produced by successive
/// scans starting from v0 = start; (u, v) are the last two before the
/// confirming scan, so ecc(u) = ecc(v) = distance.
struct MutualPair {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  Distance distance = 0;
  std::size_t scans = 0;
  std::vector<VertexId> trace;
  /// trace_distances[i] = d(v_i, v_{i+1}) with v_0 = start.
  std::vector<Distance> trace_distances;

  /// Scans before the confirming one (the "BFS iterations" count).
  std::size_t iterations() const { return scans == 0 ? 0 : scans - 1; }
};

struct GeodesicPath {
  std::vector<VertexId> vertices;
  Distance length() const { return vertices.empty() ? 0 : static_cast<Distance>(vertices.size() - 1); }
};

/// BFS spanning tree of a graph together with its tree eccentricities once
/// tree_eccentricities() has run.
struct SpanningTree {
  VertexId root = kNoVertex;
  std::vector<VertexId> parent;
  std::vector<Distance> tree_ecc;
  /// One vertex, or two adjacent vertices in ascending order.
  std::vector<VertexId> tree_center;
  Distance tree_rad = 0;

  VertexId n() const { return static_cast<VertexId>(parent.size()); }
  Distance tree_diam() const;
  /// The tree as a standalone graph on the same vertex ids.
  Graph as_graph() const;
};

enum class TreeVariant { kT1, kT2, kT3 };
enum class EccStrategy { kLinear, kRefined };

std::string_view to_string(TreeVariant variant);
std::string_view to_string(EccStrategy strategy);

/// How the root of an approximating tree was chosen.
struct RootSelection {
  VertexId root = kNoVertex;
  /// Endpoints of the geodesic the root was taken from: the mutually distant
  /// pair (T1, refined) or the two scan results v, t (T2, linear). Unset for T3.
  VertexId first = kNoVertex;
  VertexId second = kNoVertex;
  Distance endpoint_distance = 0;
  std::optional<MutualPair> pair;
  /// BFS runs over the graph spent choosing the root.
  std::size_t scans = 0;
};

struct ApproxTree {
  TreeVariant variant = TreeVariant::kT1;
  RootSelection selection;
  SpanningTree tree;
};

struct Distortion {
  /// k[v] = estimate[v] - ecc[v]; negative entries flag a broken lower bound.
  std::vector<std::int64_t> k;
  std::int64_t k_max = 0;
  double k_avg = 0.0;
  /// histogram[i] = number of vertices with k = i (negative k is not binned).
  std::vector<std::size_t> histogram;
};

struct EccEstimate {
  std::vector<Distance> estimate;
  std::string variant;
  RootSelection selection;
  /// Full graph BFS runs plus linear tree passes.
  std::size_t passes = 0;
  std::optional<Distortion> distortion;
};

VertexId furthest_vertex(const Graph& g, VertexId u);
/// Lowest-id vertex at maximum height.
VertexId furthest_vertex(const BfsLayering& layering);

MutualPair mutually_distant_pair(const Graph& g, VertexId start = 0);

GeodesicPath extract_geodesic(const Graph& g, VertexId u, VertexId v);
/// Path from layering.source to v along BFS parents.
GeodesicPath geodesic_from_layering(const BfsLayering& layering, VertexId v);

/// Vertex at distance ceil(d/2) from the last vertex of the path.
VertexId middle_vertex(const GeodesicPath& path);

SpanningTree bfs_tree(const Graph& g, VertexId root);

/// Fills tree_ecc, tree_center and tree_rad in linear time.
void tree_eccentricities(SpanningTree& tree);

/// T2 and T3 need the exact profile; throws std::invalid_argument otherwise.
ApproxTree build_approx_tree(const Graph& g, TreeVariant variant,
                             const EccentricityProfile* oracle = nullptr, VertexId start = 0);

/// linear: root at the midpoint of a (v,t)-geodesic from two scans;
/// refined: root at the midpoint of a geodesic between a mutually distant pair.
EccEstimate estimate_eccentricities(const Graph& g, EccStrategy strategy, VertexId start = 0);

Distortion measure_distortion(std::span<const Distance> estimate, std::span<const Distance> exact);

}  // namespace hyperecc
