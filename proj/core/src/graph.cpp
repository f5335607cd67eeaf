#include "hyperecc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace hyperecc {

Graph Graph::from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw GraphError("label count does not match vertex count");
  }
  std::vector<std::uint64_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge endpoint out of range");
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  std::vector<VertexId> raw(g.offsets_[n]);
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  // Sort and dedupe each list, compacting in place.
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t out = 0;
  for (VertexId v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) raw[out++] = *it;
    offsets[v + 1] = out;
  }
  raw.resize(out);
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(raw);
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::string Graph::label(VertexId v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> result;
  result.reserve(edge_count());
  for (VertexId u = 0; u < n(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

VertexId BfsLayering::ancestor(VertexId v, Distance level) const {
  while (height[v] > level) v = parent[v];
  return v;
}

BfsLayering bfs(const Graph& g, VertexId source) {
  const VertexId n = g.n();
  if (source >= n) throw GraphError("source vertex out of range");

  BfsLayering layering;
  layering.source = source;
  layering.height.assign(n, kUnreached);
  layering.parent.assign(n, kNoVertex);
  layering.sigma.assign(n, 0);
  layering.order.reserve(n);

  layering.height[source] = 0;
  layering.order.push_back(source);
  for (std::size_t head = 0; head < layering.order.size(); ++head) {
    const VertexId u = layering.order[head];
    for (VertexId v : g.neighbors(u)) {
      if (layering.height[v] != kUnreached) continue;
      layering.height[v] = layering.height[u] + 1;
      layering.parent[v] = u;
      layering.order.push_back(v);
    }
  }
  if (layering.order.size() != n) throw GraphError("graph not connected");
  for (VertexId i = 0; i < n; ++i) layering.sigma[layering.order[i]] = n - i;
  return layering;
}

std::span<const Distance> BfsWorkspace::run(const Graph& g, std::span<const VertexId> sources,
                                            Distance max_depth) {
  for (std::size_t i = 0; i < visited_count_; ++i) dist_[queue_[i]] = kUnreached;
  std::size_t tail = 0;
  for (VertexId s : sources) {
    if (dist_[s] == kUnreached) {
      dist_[s] = 0;
      queue_[tail++] = s;
    }
  }
  for (std::size_t head = 0; head < tail; ++head) {
    const VertexId u = queue_[head];
    const Distance next = dist_[u] + 1;
    if (next > max_depth) continue;
    for (VertexId v : g.neighbors(u)) {
      if (dist_[v] != kUnreached) continue;
      dist_[v] = next;
      queue_[tail++] = v;
    }
  }
  visited_count_ = tail;
  return dist_;
}

namespace {

// Component id per vertex, numbered by smallest contained vertex.
std::vector<VertexId> label_components(const Graph& g, std::size_t& count) {
  const VertexId n = g.n();
  std::vector<VertexId> comp(n, kNoVertex);
  std::vector<VertexId> queue;
  queue.reserve(n);
  count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != kNoVertex) continue;
    const auto id = static_cast<VertexId>(count++);
    queue.clear();
    queue.push_back(s);
    comp[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId v : g.neighbors(queue[head])) {
        if (comp[v] == kNoVertex) {
          comp[v] = id;
          queue.push_back(v);
        }
      }
    }
  }
  return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  label_components(g, count);
  return count <= 1;
}

ComponentExtraction largest_component(const Graph& g) {
  ComponentExtraction result;
  const auto comp = label_components(g, result.component_count);
  if (result.component_count <= 1) {
    result.graph = g;
    result.original_id.resize(g.n());
    std::iota(result.original_id.begin(), result.original_id.end(), VertexId{0});
    return result;
  }

  std::vector<std::size_t> size(result.component_count, 0);
  for (VertexId c : comp) ++size[c];
  // Components are numbered by smallest member, so the first maximum wins ties.
  const auto best =
      static_cast<VertexId>(std::max_element(size.begin(), size.end()) - size.begin());

  std::vector<VertexId> new_id(g.n(), kNoVertex);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (comp[v] == best) {
      new_id[v] = static_cast<VertexId>(result.original_id.size());
      result.original_id.push_back(v);
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u : result.original_id) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(new_id[u], new_id[v]);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(result.original_id.size());
    for (VertexId v : result.original_id) labels.push_back(g.labels()[v]);
  }
  result.graph = Graph::from_edges(static_cast<VertexId>(result.original_id.size()), edges,
                                   std::move(labels));
  return result;
}

}  // namespace hyperecc
