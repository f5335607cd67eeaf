#include "hyperecc/generators.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

namespace hyperecc::gen {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and library independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph path(VertexId n) {
  EdgeList edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle(VertexId n) {
  EdgeList edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  if (n >= 3) edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

Graph grid(VertexId rows, VertexId cols) {
  EdgeList edges;
  const auto id = [cols](VertexId r, VertexId c) { return r * cols + c; };
  for (VertexId r = 0; r < rows; ++r) {
    for (VertexId c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph star(VertexId leaves) {
  EdgeList edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete(VertexId n) {
  EdgeList edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph random_tree(VertexId n, std::mt19937_64& rng) {
  if (n <= 1) return Graph::from_edges(n, EdgeList{});
  if (n == 2) return path(2);
  std::vector<VertexId> prufer(n - 2);
  for (auto& x : prufer) x = static_cast<VertexId>(uniform_below(rng, n));
  std::vector<VertexId> degree(n, 1);
  for (VertexId x : prufer) ++degree[x];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  EdgeList edges;
  for (VertexId x : prufer) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edges(n, edges);
}

Graph random_connected(VertexId n, double p, std::mt19937_64& rng) {
  for (;;) {
    EdgeList edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (uniform_unit(rng) < p) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
}

Graph random_sparse_connected(VertexId n, std::uint64_t extra_edges, std::mt19937_64& rng) {
  EdgeList edges;
  edges.reserve(n + extra_edges);
  for (VertexId v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<VertexId>(uniform_below(rng, v)), v);
  }
  // Distinct chords only, capped by what the complete graph can hold.
  const std::uint64_t room = static_cast<std::uint64_t>(n) * (n - 1) / 2 - (n > 0 ? n - 1 : 0);
  extra_edges = std::min(extra_edges, room);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [u, v] : edges) seen.emplace(std::min(u, v), std::max(u, v));
  while (extra_edges > 0) {
    const auto u = static_cast<VertexId>(uniform_below(rng, n));
    const auto v = static_cast<VertexId>(uniform_below(rng, n));
    if (u == v || !seen.emplace(std::min(u, v), std::max(u, v)).second) continue;
    edges.emplace_back(u, v);
    --extra_edges;
  }
  return Graph::from_edges(n, edges);
}

Graph block_graph(VertexId blocks, VertexId max_block_size, std::mt19937_64& rng) {
  if (max_block_size < 2) max_block_size = 2;
  EdgeList edges;
  VertexId n = 1;
  for (VertexId b = 0; b < blocks; ++b) {
    const auto size = static_cast<VertexId>(2 + uniform_below(rng, max_block_size - 1));
    std::vector<VertexId> members{static_cast<VertexId>(uniform_below(rng, n))};
    for (VertexId i = 1; i < size; ++i) members.push_back(n++);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace hyperecc::gen
