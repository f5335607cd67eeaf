#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperecc {

using VertexId = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable undirected simple graph in CSR form.
///
/// Neighbor lists are strictly ascending, symmetric and free of self-loops.
/// Every traversal in the library walks them in that order, which is what
/// makes parents, furthest vertices and geodesics reproducible.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list over ids [0, n). Self-loops
  /// are dropped and parallel edges collapsed. Throws GraphError when an
  /// endpoint is out of range.
  static Graph from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges,
                          std::vector<std::string> labels = {});

  VertexId n() const { return static_cast<VertexId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::uint64_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  /// Original label for contiguous id v; the decimal id when no labels were recorded.
  std::string label(VertexId v) const;
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Canonical edge set: pairs (u, v) with u < v in ascending order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<std::string> labels_;
};

/// Result of one breadth-first search.
///
/// `sigma` numbers vertices n..1 in visit order (the source gets n), so a
/// parent always has a larger sigma than its children.
struct BfsLayering {
  VertexId source = kNoVertex;
  std::vector<Distance> height;
  std::vector<VertexId> parent;
  std::vector<VertexId> sigma;
  std::vector<VertexId> order;

  Distance depth() const { return height.empty() ? 0 : height[order.back()]; }
  bool in_ball(VertexId v, Distance radius) const { return height[v] <= radius; }
  /// Ancestor of v at the given level (level <= height[v]).
  VertexId ancestor(VertexId v, Distance level) const;
};

/// Full BFS from `source`. Throws GraphError("graph not connected") when some
/// vertex is unreachable.
BfsLayering bfs(const Graph& g, VertexId source);

/// Reusable scratch space for repeated distance-only sweeps.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(VertexId n) : dist_(n, kUnreached), queue_(n) {}

  /// Runs BFS from the given sources (multi-source when more than one) and
  /// returns the distance array. Vertices beyond `max_depth` stay kUnreached.
  std::span<const Distance> run(const Graph& g, std::span<const VertexId> sources,
                                Distance max_depth = kUnreached);
  std::span<const Distance> run(const Graph& g, VertexId source, Distance max_depth = kUnreached) {
    return run(g, std::span<const VertexId>(&source, 1), max_depth);
  }
  /// Vertices reached by the last run, in visit order.
  std::span<const VertexId> visited() const { return {queue_.data(), visited_count_}; }

 private:
  std::vector<Distance> dist_;
  std::vector<VertexId> queue_;
  std::size_t visited_count_ = 0;
};

struct ComponentExtraction {
  Graph graph;
  /// original_id[new_id] is the vertex id in the input graph.
  std::vector<VertexId> original_id;
  std::size_t component_count = 0;
};

/// Induced subgraph on the largest connected component. Ties go to the
/// component containing the smallest vertex id. A connected input comes back
/// unchanged with the identity map.
ComponentExtraction largest_component(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace hyperecc
