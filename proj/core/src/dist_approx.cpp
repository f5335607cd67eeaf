#include "hyperecc/dist_approx.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace hyperecc {

// ---------------------------------------------------------------- PowerReach

bool PowerReach::within(VertexId u, VertexId v) const {
  const auto ball = reach(v);
  return std::binary_search(ball.begin(), ball.end(), u);
}

PowerReach power_reachability(const Graph& g, Distance lambda, const PowerReachOptions& options) {
  const VertexId n = g.n();
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<VertexId> members;
  BfsWorkspace ws(n);
  for (VertexId v = 0; v < n; ++v) {
    ws.run(g, v, lambda);
    const auto ball = ws.visited();
    if (members.size() + ball.size() > options.max_entries) {
      throw BudgetError("power graph for lambda=" + std::to_string(lambda) + " exceeds " +
                        std::to_string(options.max_entries) + " entries");
    }
    const auto first = members.size();
    members.insert(members.end(), ball.begin(), ball.end());
    std::sort(members.begin() + static_cast<std::ptrdiff_t>(first), members.end());
    offsets[v + 1] = members.size();
  }
  return PowerReach(lambda, std::move(offsets), std::move(members));
}

// --------------------------------------------------------- DistanceEstimate

DistanceEstimate::DistanceEstimate(VertexId n, VertexId root, Distance parameter, EstimateMode mode)
    : n_(n), root_(root), parameter_(parameter), mode_(mode) {
  const std::size_t size = n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
  values_.assign(size, 0);
  written_.assign(size, false);
}

void DistanceEstimate::set(VertexId x, VertexId y, Distance value) {
  if (x == y) return;
  if (value > std::numeric_limits<std::uint16_t>::max()) {
    throw std::overflow_error("distance estimate exceeds 16-bit storage");
  }
  const auto i = index(x, y);
  if (written_[i]) {
    ++reassigned_;
  } else {
    written_[i] = true;
    ++assigned_;
  }
  values_[i] = static_cast<std::uint16_t>(value);
}

void DistanceEstimate::overwrite(VertexId x, VertexId y, Distance value) {
  if (x == y) return;
  const auto i = index(x, y);
  if (!written_[i]) {
    written_[i] = true;
    ++assigned_;
  }
  values_[i] = static_cast<std::uint16_t>(value);
}

namespace {

constexpr std::array<char, 8> kMagic{'H', 'Y', 'E', 'C', 'D', 'H', 'T', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) throw std::runtime_error("truncated estimate file");
  return std::uint32_t{bytes[0]} | (std::uint32_t{bytes[1]} << 8) | (std::uint32_t{bytes[2]} << 16) |
         (std::uint32_t{bytes[3]} << 24);
}

}  // namespace

void DistanceEstimate::write_binary(std::ostream& out) const {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, n_);
  for (std::uint16_t v : values_) {
    const char bytes[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
    out.write(bytes, 2);
  }
}

DistanceEstimate DistanceEstimate::read_binary(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("not a distance estimate file");
  }
  const VertexId n = get_u32(in);
  DistanceEstimate est(n, kNoVertex, 0, EstimateMode::kExactPower);
  for (auto& v : est.values_) {
    unsigned char bytes[2];
    if (!in.read(reinterpret_cast<char*>(bytes), 2)) throw std::runtime_error("truncated estimate file");
    v = static_cast<std::uint16_t>(bytes[0] | (bytes[1] << 8));
  }
  est.written_.assign(est.values_.size(), true);
  est.assigned_ = est.values_.size();
  return est;
}

// ------------------------------------------------------------------- Sweep

namespace {

// BFS layering plus the per-level and per-parent index ranges the sweep walks.
// In BFS order every level, and the children of every vertex, are contiguous.
struct LayeredTree {
  BfsLayering layering;
  std::vector<std::size_t> position;      // index of v in layering.order
  std::vector<std::size_t> level_begin;   // level k occupies [level_begin[k], level_begin[k+1])
  std::vector<std::size_t> child_begin;   // children of v occupy [child_begin[v], child_end[v])
  std::vector<std::size_t> child_end;

  explicit LayeredTree(BfsLayering l) : layering(std::move(l)) {
    const auto& order = layering.order;
    const std::size_t n = order.size();
    position.resize(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
    const Distance depth = layering.depth();
    level_begin.assign(static_cast<std::size_t>(depth) + 2, n);
    for (std::size_t i = n; i-- > 0;) level_begin[layering.height[order[i]]] = i;
    child_begin.assign(n, 0);
    child_end.assign(n, 0);
    for (std::size_t i = n; i-- > 1;) {
      const VertexId p = layering.parent[order[i]];
      if (child_end[p] == 0) child_end[p] = i + 1;
      child_begin[p] = i;
    }
  }
};

// Intrusive singly linked lists, one per live representative. Stamps avoid
// clearing between sources.
class SubtreeFamily {
 public:
  explicit SubtreeFamily(std::size_t n) : head_(n), tail_(n), next_(n), live_(n, 0) {}

  void begin_source() { ++epoch_; }
  bool live(VertexId u) const { return live_[u] == epoch_; }
  void make_singleton(VertexId u) {
    head_[u] = tail_[u] = u;
    next_[u] = kNoVertex;
    live_[u] = epoch_;
  }
  // Appends the set of `child` to the set of `u` and retires `child`.
  void absorb(VertexId u, VertexId child) {
    next_[tail_[u]] = head_[child];
    tail_[u] = tail_[child];
    live_[child] = 0;
  }
  template <typename F>
  void drain(VertexId u, F&& visit) {
    for (VertexId v = head_[u]; v != kNoVertex; v = next_[v]) visit(v);
    live_[u] = 0;
  }
  template <typename F>
  void for_each(VertexId u, F&& visit) const {
    for (VertexId v = head_[u]; v != kNoVertex; v = next_[v]) visit(v);
  }

 private:
  std::vector<VertexId> head_, tail_, next_;
  std::vector<std::uint32_t> live_;
  std::uint32_t epoch_ = 0;
};

void validate_family(const LayeredTree& tree, const SubtreeFamily& family, const DistanceEstimate& est,
                     const std::vector<char>& done_for_x, VertexId x, Distance k) {
  const auto& L = tree.layering;
  const std::size_t n = L.order.size();
  std::vector<char> in_family(n, 0);
  for (std::size_t i = tree.level_begin[k]; i < tree.level_begin[k + 1]; ++i) {
    const VertexId u = L.order[i];
    if (!family.live(u)) continue;
    family.for_each(u, [&](VertexId v) {
      if (in_family[v] || L.ancestor(v, k) != u) {
        throw std::logic_error("subtree family broken at level " + std::to_string(k));
      }
      in_family[v] = 1;
    });
  }
  for (VertexId v = 0; v < n; ++v) {
    const bool expected = L.sigma[v] > L.sigma[x] && !done_for_x[v] && L.height[v] >= k;
    if (expected != static_cast<bool>(in_family[v])) {
      throw std::logic_error("subtree family does not cover the unassigned vertices at level " +
                             std::to_string(k));
    }
  }
  (void)est;
}

// Shared sweep. `close(u, xk)` answers the level test; `begin_level(xk)` lets
// a bitmap-backed test stamp the ball of xk once per level.
template <typename BeginLevel, typename Close>
void sweep(const LayeredTree& tree, Distance additive, DistanceEstimate& est, const SweepOptions& options,
           BeginLevel&& begin_level, Close&& close) {
  const auto& L = tree.layering;
  const auto& order = L.order;
  const std::size_t n = order.size();
  SubtreeFamily family(n);
  std::vector<char> done_for_x;
  if (options.validate_family) done_for_x.assign(n, 0);

  // Increasing sigma = reverse BFS order.
  for (std::size_t xi = n; xi-- > 0;) {
    const VertexId x = order[xi];
    const Distance hx = L.height[x];
    family.begin_source();
    if (options.validate_family) std::fill(done_for_x.begin(), done_for_x.end(), 0);

    // Same-level vertices visited before x have larger sigma.
    for (std::size_t i = tree.level_begin[hx]; i < xi; ++i) family.make_singleton(order[i]);

    VertexId xk = x;
    for (Distance k = hx;; --k) {
      if (options.validate_family) validate_family(tree, family, est, done_for_x, x, k);
      begin_level(xk);
      const std::size_t level_end = k == hx ? xi : tree.level_begin[k + 1];
      for (std::size_t i = tree.level_begin[k]; i < level_end; ++i) {
        const VertexId u = order[i];
        if (!family.live(u) || !close(u, xk)) continue;
        family.drain(u, [&](VertexId v) {
          est.set(x, v, hx + L.height[v] - 2 * k + additive);
          if (options.validate_family) done_for_x[v] = 1;
        });
      }
      if (k == 0) break;
      for (std::size_t i = tree.level_begin[k - 1]; i < tree.level_begin[k]; ++i) {
        const VertexId u = order[i];
        family.make_singleton(u);
        for (std::size_t c = tree.child_begin[u]; c < tree.child_end[u]; ++c) {
          const VertexId child = order[c];
          if (family.live(child)) family.absorb(u, child);
        }
      }
      xk = L.parent[xk];
    }
    if (x != L.source) est.overwrite(x, L.source, hx);
  }
}

DistanceEstimate sweep_with_reach(const Graph& g, const PowerReach& reach, VertexId root,
                                  const SweepOptions& options) {
  LayeredTree tree(bfs(g, root));
  DistanceEstimate est(g.n(), root, reach.lambda(), EstimateMode::kExactPower);
  if (options.bitmap_membership) {
    std::vector<std::uint32_t> stamp(g.n(), 0);
    std::uint32_t current = 0;
    sweep(
        tree, reach.lambda(), est, options,
        [&](VertexId xk) {
          ++current;
          for (VertexId v : reach.reach(xk)) stamp[v] = current;
        },
        [&](VertexId u, VertexId) { return stamp[u] == current; });
  } else {
    sweep(
        tree, reach.lambda(), est, options, [](VertexId) {},
        [&](VertexId u, VertexId xk) { return reach.within(u, xk); });
  }
  return est;
}

}  // namespace

DistanceEstimate approximate_all_distances(const Graph& g, Distance lambda, VertexId root,
                                           const SweepOptions& options) {
  return sweep_with_reach(g, power_reachability(g, lambda), root, options);
}

DistanceEstimate approximate_all_distances(const Graph& g, const PowerReach& reach, VertexId root,
                                           const SweepOptions& options) {
  return sweep_with_reach(g, reach, root, options);
}

DistanceEstimate approximate_all_distances(const Graph& g, const DistanceMatrix& d, Distance lambda,
                                           VertexId root, const SweepOptions& options) {
  LayeredTree tree(bfs(g, root));
  DistanceEstimate est(g.n(), root, lambda, EstimateMode::kExactPower);
  sweep(
      tree, lambda, est, options, [](VertexId) {},
      [&](VertexId u, VertexId xk) { return d(u, xk) <= lambda; });
  return est;
}

DistanceEstimate approximate_all_distances_estimated(const Graph& g, Distance rho,
                                                     const DistanceEstimator& estimator, VertexId root,
                                                     const SweepOptions& options) {
  LayeredTree tree(bfs(g, root));
  DistanceEstimate est(g.n(), root, rho, EstimateMode::kEstimator);
  const Distance threshold = 2 * rho + 1;
  sweep(
      tree, threshold, est, options, [](VertexId) {},
      [&](VertexId u, VertexId xk) {
        const Distance value = estimator.query(u, xk);
        if (options.check_contract && ((u == xk) != (value == 0))) {
          throw ContractViolation("estimator returned " + std::to_string(value) + " for pair (" +
                                  std::to_string(u) + ", " + std::to_string(xk) + ")");
        }
        return value <= threshold;
      });
  return est;
}

// -------------------------------------------------------- Closed form

namespace {

template <typename Close>
Distance separation_level_impl(const BfsLayering& L, VertexId x, VertexId y, Close&& close) {
  Distance k = std::min(L.height[x], L.height[y]);
  VertexId xk = L.ancestor(x, k);
  VertexId yk = L.ancestor(y, k);
  while (k > 0 && !close(xk, yk)) {
    xk = L.parent[xk];
    yk = L.parent[yk];
    --k;
  }
  return k;
}

}  // namespace

Distance separation_level(const BfsLayering& layering, const PowerReach& reach, VertexId x, VertexId y) {
  return separation_level_impl(layering, x, y, [&](VertexId a, VertexId b) { return reach.within(a, b); });
}

Distance separation_level(const BfsLayering& layering, const DistanceMatrix& d, VertexId x, VertexId y,
                          Distance threshold) {
  return separation_level_impl(layering, x, y,
                               [&](VertexId a, VertexId b) { return d(a, b) <= threshold; });
}

Distance separation_level(const BfsLayering& layering, const DistanceEstimator& estimator, VertexId x,
                          VertexId y, Distance threshold) {
  return separation_level_impl(layering, x, y,
                               [&](VertexId a, VertexId b) { return estimator.query(a, b) <= threshold; });
}

Distance closed_form_estimate(const BfsLayering& layering, Distance level, Distance additive, VertexId x,
                              VertexId y) {
  if (x == y) return 0;
  if (x == layering.source) return layering.height[y];
  if (y == layering.source) return layering.height[x];
  return layering.height[x] + layering.height[y] - 2 * level + additive;
}

DistanceBounds distance_sandwich(const BfsLayering& layering, const DistanceMatrix& d, VertexId x,
                                 VertexId y, Distance lambda) {
  const Distance k = separation_level(layering, d, x, y, lambda);
  const std::int64_t base = std::int64_t{layering.height[x]} + layering.height[y] - 2 * std::int64_t{k};
  return {base - 1, base + d(layering.ancestor(x, k), layering.ancestor(y, k))};
}

// -------------------------------------------------------------- Statistics

ErrorStats error_stats(const DistanceEstimate& estimate, const DistanceMatrix& d) {
  ErrorStats stats;
  const VertexId n = estimate.n();
  long double sum = 0;
  bool first = true;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const std::int64_t err = std::int64_t{estimate(x, y)} - d(x, y);
      sum += 2 * err;
      if (first || err > stats.max_error) {
        stats.max_error = err;
        stats.worst = {x, y};
      }
      stats.min_error = first ? err : std::min(stats.min_error, err);
      first = false;
    }
  }
  stats.avg_error = n == 0 ? 0.0 : static_cast<double>(sum / (static_cast<long double>(n) * n));
  return stats;
}

std::vector<VertexId> deepest_vertices(const BfsLayering& layering, std::size_t count) {
  std::vector<VertexId> ids(layering.height.size());
  for (VertexId v = 0; v < ids.size(); ++v) ids[v] = v;
  std::stable_sort(ids.begin(), ids.end(),
                   [&](VertexId a, VertexId b) { return layering.height[a] > layering.height[b]; });
  ids.resize(std::min(count, ids.size()));
  return ids;
}

SampledRows estimate_rows(const Graph& g, const BfsLayering& L, Distance lambda,
                          std::span<const VertexId> sources) {
  const VertexId n = g.n();
  SampledRows out;
  out.sources.assign(sources.begin(), sources.end());
  BfsWorkspace ws(n);
  for (VertexId x : sources) {
    const Distance hx = L.height[x];
    // dist_from_ancestor[k][v] = d(x_k, v)
    std::vector<std::vector<Distance>> dist_from_ancestor(static_cast<std::size_t>(hx) + 1);
    for (VertexId xk = x;; xk = L.parent[xk]) {
      const auto dist = ws.run(g, xk);
      dist_from_ancestor[L.height[xk]].assign(dist.begin(), dist.end());
      if (xk == L.source) break;
    }
    std::vector<Distance> row(n, 0);
    for (VertexId y = 0; y < n; ++y) {
      const Distance k = separation_level_impl(L, x, y, [&](VertexId a, VertexId b) {
        return dist_from_ancestor[L.height[a]][b] <= lambda;
      });
      row[y] = closed_form_estimate(L, k, lambda, x, y);
    }
    out.rows.push_back(std::move(row));
    out.exact.push_back(std::move(dist_from_ancestor[hx]));
  }
  return out;
}

ErrorStats error_stats(const SampledRows& rows) {
  ErrorStats stats;
  long double sum = 0;
  std::size_t count = 0;
  bool first = true;
  for (std::size_t i = 0; i < rows.sources.size(); ++i) {
    const VertexId x = rows.sources[i];
    for (VertexId y = 0; y < rows.rows[i].size(); ++y) {
      const std::int64_t err = std::int64_t{rows.rows[i][y]} - rows.exact[i][y];
      sum += err;
      ++count;
      if (first || err > stats.max_error) {
        stats.max_error = err;
        stats.worst = {std::min(x, y), std::max(x, y)};
      }
      stats.min_error = first ? err : std::min(stats.min_error, err);
      first = false;
    }
  }
  stats.avg_error = count == 0 ? 0.0 : static_cast<double>(sum / count);
  return stats;
}

AdmissibleDelta smallest_admissible_delta(const Graph& g, VertexId root, const DistanceMatrix& d) {
  AdmissibleDelta result;
  const Distance diam = eccentricities_from_matrix(d).diam;
  for (Distance delta = 0;; ++delta) {
    const auto est = approximate_all_distances(g, d, delta, root);
    const auto stats = error_stats(est, d);
    DeltaRow row{delta, stats.max_error, stats.avg_error, stats.max_error <= std::int64_t{delta} + 1};
    result.rows.push_back(row);
    if (row.admissible || delta >= diam) {
      result.delta = delta;
      result.max_error = row.max_error;
      result.avg_error = row.avg_error;
      return result;
    }
  }
}

AdmissibleDelta smallest_admissible_delta_sampled(const Graph& g, VertexId root,
                                                  std::span<const VertexId> sources) {
  AdmissibleDelta result;
  const BfsLayering layering = bfs(g, root);
  const Distance bound = 2 * layering.depth();
  for (Distance delta = 0;; ++delta) {
    const auto stats = error_stats(estimate_rows(g, layering, delta, sources));
    DeltaRow row{delta, stats.max_error, stats.avg_error, stats.max_error <= std::int64_t{delta} + 1};
    result.rows.push_back(row);
    if (row.admissible || delta >= bound) {
      result.delta = delta;
      result.max_error = row.max_error;
      result.avg_error = row.avg_error;
      return result;
    }
  }
}

}  // namespace hyperecc
