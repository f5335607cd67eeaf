#include "hyperecc/hyperbolicity.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hyperecc/generators.hpp"
#include "parallel.hpp"

namespace hyperecc {

std::string HalfInt::to_string() const {
  const std::int64_t whole = doubled_ / 2;
  const bool half = doubled_ % 2 != 0;
  std::string s = (doubled_ < 0 && whole == 0) ? "-0" : std::to_string(whole);
  return s + (half ? ".5" : ".0");
}

HalfInt gromov_product(const DistanceMatrix& d, VertexId y, VertexId z, VertexId w) {
  const auto doubled = static_cast<std::int64_t>(d(y, w)) + d(z, w) - d(y, z);
  return HalfInt::from_doubled(doubled);
}

namespace {

inline std::int64_t doubled_delta(Distance ab, Distance ce, Distance ac, Distance be, Distance ae,
                                  Distance bc) {
  std::int64_t s1 = std::int64_t{ab} + ce;
  std::int64_t s2 = std::int64_t{ac} + be;
  std::int64_t s3 = std::int64_t{ae} + bc;
  if (s1 < s2) std::swap(s1, s2);
  if (s2 < s3) std::swap(s2, s3);
  if (s1 < s2) std::swap(s1, s2);
  return s1 - s2;
}

struct Best {
  std::int64_t doubled = -1;
  std::array<VertexId, 4> witness{kNoVertex, kNoVertex, kNoVertex, kNoVertex};
  std::uint64_t count = 0;

  void offer(std::int64_t value, const std::array<VertexId, 4>& q) {
    if (value > doubled || (value == doubled && q < witness)) {
      doubled = value;
      witness = q;
    }
  }
};

HyperbolicityReport finish(const Best& best, bool approximate) {
  HyperbolicityReport r;
  r.delta4 = HalfInt::from_doubled(std::max<std::int64_t>(best.doubled, 0));
  r.witness = best.witness;
  r.thinness_bound = r.delta4 * 4;
  r.approximate = approximate;
  r.quadruples = best.count;
  return r;
}

// Enumerates ascending quadruples whose first element is ids[i].
void scan_first(const DistanceMatrix& d, std::span<const VertexId> ids, std::size_t i, Best& best) {
  const VertexId a = ids[i];
  const std::size_t m = ids.size();
  for (std::size_t j = i + 1; j < m; ++j) {
    const VertexId b = ids[j];
    const Distance ab = d(a, b);
    for (std::size_t k = j + 1; k < m; ++k) {
      const VertexId c = ids[k];
      const Distance ac = d(a, c);
      const Distance bc = d(b, c);
      const auto row_a = d.row(a);
      const auto row_b = d.row(b);
      const auto row_c = d.row(c);
      for (std::size_t l = k + 1; l < m; ++l) {
        const VertexId e = ids[l];
        const std::int64_t value = doubled_delta(ab, row_c[e], ac, row_b[e], row_a[e], bc);
        ++best.count;
        if (value >= best.doubled) best.offer(value, {a, b, c, e});
      }
    }
  }
}

}  // namespace

HalfInt quadruple_delta(const DistanceMatrix& d, VertexId a, VertexId b, VertexId c, VertexId e) {
  return HalfInt::from_doubled(doubled_delta(d(a, b), d(c, e), d(a, c), d(b, e), d(a, e), d(b, c)));
}

HyperbolicityReport four_point_delta(const DistanceMatrix& d, const HyperbolicityOptions& options) {
  if (!options.force && d.n() > options.max_exact_vertices) {
    throw BudgetError("exact four-point enumeration limited to " +
                      std::to_string(options.max_exact_vertices) +
                      " vertices; use sampling mode or --force");
  }
  std::vector<VertexId> ids(d.n());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  std::vector<Best> partial(ids.size());
  detail::parallel_for(
      ids.size(), options.threads, [] { return 0; },
      [&](int&, std::size_t i) { scan_first(d, ids, i, partial[i]); });
  Best total;
  for (const auto& p : partial) {
    total.count += p.count;
    if (p.doubled >= 0) total.offer(p.doubled, p.witness);
  }
  return finish(total, false);
}

HyperbolicityReport four_point_delta(const DistanceMatrix& d, std::span<const VertexId> subset) {
  std::vector<VertexId> ids(subset.begin(), subset.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Best best;
  for (std::size_t i = 0; i < ids.size(); ++i) scan_first(d, ids, i, best);
  return finish(best, false);
}

HyperbolicityReport sampled_four_point_delta(const Graph& g, VertexId pool_size,
                                             std::uint64_t samples, std::uint64_t seed) {
  const VertexId n = g.n();
  pool_size = std::min(pool_size, n);
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates draw of distinct pool vertices.
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  for (VertexId i = 0; i < pool_size; ++i) {
    std::swap(all[i], all[i + gen::uniform_below(rng, n - i)]);
  }
  std::vector<VertexId> pool(all.begin(), all.begin() + pool_size);

  DistanceMatrix local(pool_size);
  BfsWorkspace ws(n);
  for (VertexId i = 0; i < pool_size; ++i) {
    const auto dist = ws.run(g, pool[i]);
    if (ws.visited().size() != n) throw GraphError("graph not connected");
    for (VertexId j = 0; j < pool_size; ++j) local.at(i, j) = dist[pool[j]];
  }

  Best best;
  if (pool_size >= 4) {
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::array<VertexId, 4> q{};
      for (;;) {
        for (auto& x : q) x = static_cast<VertexId>(gen::uniform_below(rng, pool_size));
        std::sort(q.begin(), q.end());
        if (std::adjacent_find(q.begin(), q.end()) == q.end()) break;
      }
      ++best.count;
      const auto value = quadruple_delta(local, q[0], q[1], q[2], q[3]).doubled();
      std::array<VertexId, 4> witness{pool[q[0]], pool[q[1]], pool[q[2]], pool[q[3]]};
      std::sort(witness.begin(), witness.end());
      best.offer(value, witness);
    }
  }
  return finish(best, true);
}

}  // namespace hyperecc
