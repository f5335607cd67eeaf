#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hyperecc/dist_approx.hpp"
#include "hyperecc/ecc_approx.hpp"
#include "hyperecc/exact.hpp"
#include "hyperecc/generators.hpp"
#include "oracles.hpp"

using namespace hyperecc;

namespace {

std::vector<VertexId> reach_of(const PowerReach& r, VertexId v) { return {r.reach(v).begin(), r.reach(v).end()}; }

// Compares a sweep result against the definition-level oracle matrix.
void expect_matches(const DistanceEstimate& est, const oracle::Matrix& expect) {
  for (VertexId x = 0; x < est.n(); ++x)
    for (VertexId y = 0; y < est.n(); ++y) ASSERT_EQ(est(x, y), expect[x][y]) << "pair " << x << "," << y;
}

class BrokenEstimator final : public DistanceEstimator {
 public:
  Distance query(VertexId, VertexId) const override { return 0; }
  Distance alpha() const override { return 1; }
  Distance beta() const override { return 0; }
};

}  // namespace

TEST(PowerReach, Examples) {
  const PowerReach id = power_reachability(gen::cycle(6), 0);
  for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(reach_of(id, v), (std::vector<VertexId>{v}));
  EXPECT_EQ(reach_of(power_reachability(gen::path(5), 1), 2), (std::vector<VertexId>{1, 2, 3}));
  const PowerReach c6 = power_reachability(gen::cycle(6), 2);
  EXPECT_EQ(reach_of(c6, 0), (std::vector<VertexId>{0, 1, 2, 4, 5}));
  EXPECT_TRUE(c6.within(0, 4));
  EXPECT_FALSE(c6.within(0, 3));
}

TEST(PowerReach, MatchesFloydWarshallAndBudget) {
  std::mt19937_64 rng(50);
  const Graph g = gen::random_connected(35, 0.1, rng);
  const auto fw = oracle::floyd_warshall(g);
  const PowerReach r = power_reachability(g, 3);
  std::uint64_t total = 0;
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v = 0; v < g.n(); ++v) {
      EXPECT_EQ(r.within(u, v), fw[u][v] <= 3);
      total += fw[u][v] <= 3;
    }
  }
  EXPECT_EQ(r.total_entries(), total);
  EXPECT_THROW(power_reachability(g, 3, {.max_entries = 10}), BudgetError);
}

TEST(SeparationLevel, Examples) {
  const Graph p5 = gen::path(5);
  const BfsLayering L5 = bfs(p5, 2);
  EXPECT_EQ(separation_level(L5, power_reachability(p5, 0), 0, 4), 0u);

  // C6 rooted at 0 with lambda 2: x=2, y=4 are themselves within 2, so the
  // separation level is their own level.
  const Graph c6 = gen::cycle(6);
  const BfsLayering L6 = bfs(c6, 0);
  const DistanceMatrix d6 = all_pairs_distances(c6);
  EXPECT_EQ(separation_level(L6, power_reachability(c6, 2), 2, 4), 2u);
  EXPECT_EQ(separation_level(L6, d6, 2, 4, 2), 2u);
  EXPECT_EQ(separation_level(L6, d6, 2, 4, 1), 0u);
  EXPECT_EQ(separation_level(L6, d6, 3, 4, 1), 0u);

  // Nested pair: x on the root path of y.
  EXPECT_EQ(separation_level(L6, d6, 1, 3, 0), 1u);
  EXPECT_EQ(closed_form_estimate(L6, 1, 0, 1, 3), 2u);
}

TEST(Sweep, CycleExamples) {
  const Graph c6 = gen::cycle(6);
  const DistanceEstimate est = approximate_all_distances(c6, 2, 0);
  EXPECT_EQ(est(2, 4), 2u);
  EXPECT_EQ(est(1, 5), 2u);
  EXPECT_EQ(est(3, 0), 3u);
  EXPECT_EQ(est(3, 4), 3u);
  EXPECT_TRUE(est.complete());
  EXPECT_EQ(est.reassigned_pairs(), 0u);
  const BfsLayering L = bfs(c6, 0);
  const DistanceMatrix d = all_pairs_distances(c6);
  expect_matches(est, oracle::estimate(oracle::layering(c6, 0), [&](VertexId a, VertexId b) { return d(a, b); }, 0, 2, 2));
  const DistanceBounds b = distance_sandwich(L, d, 2, 4, 2);
  EXPECT_EQ(b.lower, -1);
  EXPECT_EQ(b.upper, 2);
}

TEST(Sweep, TreesWithLambdaZeroAreExact) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph t = gen::random_tree(static_cast<VertexId>(2 + gen::uniform_below(rng, 40)), rng);
    const auto fw = oracle::floyd_warshall(t);
    const auto root = static_cast<VertexId>(gen::uniform_below(rng, t.n()));
    const DistanceEstimate est = approximate_all_distances(t, 0, root);
    const BfsLayering L = bfs(t, root);
    const DistanceMatrix d = all_pairs_distances(t);
    for (VertexId x = 0; x < t.n(); ++x) {
      for (VertexId y = 0; y < t.n(); ++y) {
        ASSERT_EQ(est(x, y), fw[x][y]);
        if (x == y) continue;
        const DistanceBounds b = distance_sandwich(L, d, x, y, 0);
        EXPECT_EQ(b.lower, fw[x][y] - 1);
        EXPECT_EQ(b.upper, fw[x][y]);
      }
    }
  }
}

TEST(Sweep, MatchesDefinitionAndGuaranteeOnRandomGraphs) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<VertexId>(5 + gen::uniform_below(rng, 36));
    const Graph g = gen::random_connected(n, 0.05 + 0.5 * gen::uniform_unit(rng), rng);
    const auto fw = oracle::floyd_warshall(g);
    const auto tau = static_cast<Distance>(2 * oracle::doubled_delta4(fw));
    const auto root = static_cast<VertexId>(gen::uniform_below(rng, n));
    const auto metric = [&](VertexId a, VertexId b) { return fw[a][b]; };
    const auto L = oracle::layering(g, root);

    SweepOptions checked;
    checked.validate_family = true;
    const DistanceEstimate est = approximate_all_distances(g, tau, root, checked);
    expect_matches(est, oracle::estimate(L, metric, root, tau, tau));
    EXPECT_EQ(est.reassigned_pairs(), 0u);
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = x + 1; y < n; ++y) {
        EXPECT_GE(est(x, y), fw[x][y]);
        EXPECT_LE(est(x, y), fw[x][y] + tau + 1);
      }
    }

    SweepOptions bitmap;
    bitmap.bitmap_membership = true;
    const auto lambda = static_cast<Distance>(gen::uniform_below(rng, 4));
    const auto a = approximate_all_distances(g, lambda, root, bitmap);
    const auto b = approximate_all_distances(g, all_pairs_distances(g), lambda, root);
    EXPECT_TRUE(std::ranges::equal(a.packed(), b.packed()));
    expect_matches(a, oracle::estimate(L, metric, root, lambda, lambda));
  }
}

TEST(EstimatedSweep, PathWithExactEstimator) {
  const Graph p5 = gen::path(5);
  const DistanceMatrix d = all_pairs_distances(p5);
  const ExactEstimator exact(d);
  const DistanceEstimate est = approximate_all_distances_estimated(p5, 0, exact, 2);
  EXPECT_EQ(est(0, 4), 5u);
  EXPECT_EQ(est(0, 2), 2u);
  EXPECT_EQ(est(1, 3), 3u);
  EXPECT_EQ(est(0, 1), 2u);
  EXPECT_EQ(est.mode(), EstimateMode::kEstimator);
}

TEST(EstimatedSweep, CycleWithExactEstimator) {
  const Graph c6 = gen::cycle(6);
  const DistanceMatrix d = all_pairs_distances(c6);
  const ExactEstimator exact(d);
  for (VertexId root = 0; root < 6; ++root) {
    const ErrorStats s = error_stats(approximate_all_distances_estimated(c6, 1, exact, root), d);
    EXPECT_GE(s.min_error, 0);
    EXPECT_LE(s.max_error, 4);
  }
}

TEST(EstimatedSweep, DoublingEstimatorOnRandomGraphs) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<VertexId>(5 + gen::uniform_below(rng, 96));
    const Graph g = gen::random_connected(n, 0.03 + 0.3 * gen::uniform_unit(rng), rng);
    const auto fw = oracle::floyd_warshall(g);
    const auto rho = static_cast<Distance>(2 * oracle::doubled_delta4(fw));
    const DistanceMatrix d = all_pairs_distances(g);
    const DoublingEstimator doubling(d);
    const auto root = static_cast<VertexId>(gen::uniform_below(rng, n));
    const DistanceEstimate est = approximate_all_distances_estimated(g, rho, doubling, root);
    const auto metric = [&](VertexId a, VertexId b) { return std::int64_t{doubling.query(a, b)}; };
    expect_matches(est, oracle::estimate(oracle::layering(g, root), metric, root, 2 * rho + 1, 2 * rho + 1));
    const ErrorStats s = error_stats(est, d);
    EXPECT_GE(s.min_error, 0);
    EXPECT_LE(s.max_error, 2 * std::int64_t{rho} + 2);
  }
}

TEST(EstimatedSweep, ContractViolationIsReported) {
  const BrokenEstimator broken;
  EXPECT_THROW(approximate_all_distances_estimated(gen::cycle(5), 0, broken, 0), ContractViolation);
}

TEST(DistanceEstimate, BinaryRoundTripAndLayout) {
  const DistanceEstimate est = approximate_all_distances(gen::cycle(6), 2, 0);
  std::stringstream buf;
  est.write_binary(buf);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 8u + 4 + 2 * 15);
  EXPECT_EQ(bytes.substr(0, 8), "HYECDHT1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 6);
  EXPECT_EQ(bytes[9], 0);
  // Row-major lower triangle: first entry is (1,0), little-endian.
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), est(1, 0));
  EXPECT_EQ(bytes[13], 0);
  const DistanceEstimate back = DistanceEstimate::read_binary(buf);
  EXPECT_EQ(back.n(), 6u);
  EXPECT_TRUE(std::ranges::equal(back.packed(), est.packed()));

  std::stringstream junk("NOTMAGIC");
  EXPECT_THROW(DistanceEstimate::read_binary(junk), std::runtime_error);
}

TEST(DistanceEstimate, WideValuesRejected) {
  DistanceEstimate est(3, 0, 0, EstimateMode::kExactPower);
  est.set(1, 2, 65535);
  EXPECT_EQ(est(2, 1), 65535u);
  EXPECT_THROW(est.set(0, 1, 65536), std::overflow_error);
  est.set(1, 2, 4);
  EXPECT_EQ(est.reassigned_pairs(), 1u);
}

TEST(ErrorStats, AveragesOverAllOrderedPairs) {
  const Graph c6 = gen::cycle(6);
  const DistanceMatrix d = all_pairs_distances(c6);
  const DistanceEstimate est = approximate_all_distances(c6, 2, 0);
  std::int64_t sum = 0, worst = 0;
  for (VertexId x = 0; x < 6; ++x)
    for (VertexId y = 0; y < 6; ++y) {
      sum += std::int64_t{est(x, y)} - d(x, y);
      worst = std::max(worst, std::int64_t{est(x, y)} - d(x, y));
    }
  const ErrorStats s = error_stats(est, d);
  EXPECT_EQ(s.max_error, worst);
  EXPECT_DOUBLE_EQ(s.avg_error, static_cast<double>(sum) / 36.0);
  EXPECT_EQ(std::int64_t{est(s.worst.first, s.worst.second)} - d(s.worst.first, s.worst.second), worst);
  EXPECT_LT(s.worst.first, s.worst.second);
}

TEST(AdmissibleDelta, CycleTrace) {
  const Graph c6 = gen::cycle(6);
  const DistanceMatrix d = all_pairs_distances(c6);
  const AdmissibleDelta adm = smallest_admissible_delta(c6, 0, d);
  // Expected trace from the definition oracle.
  std::vector<std::int64_t> expect_max;
  const auto L = oracle::layering(c6, 0);
  const auto metric = [&](VertexId a, VertexId b) { return std::int64_t{d(a, b)}; };
  for (std::int64_t delta = 0; delta <= 2; ++delta) {
    const auto m = oracle::estimate(L, metric, 0, delta, delta);
    std::int64_t worst = 0;
    for (VertexId x = 0; x < 6; ++x)
      for (VertexId y = 0; y < 6; ++y) worst = std::max(worst, m[x][y] - std::int64_t{d(x, y)});
    expect_max.push_back(worst);
  }
  EXPECT_EQ(expect_max, (std::vector<std::int64_t>{4, 5, 2}));
  ASSERT_EQ(adm.rows.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(adm.rows[i].delta, i);
    EXPECT_EQ(adm.rows[i].max_error, expect_max[i]);
    EXPECT_EQ(adm.rows[i].admissible, i == 2);
  }
  EXPECT_EQ(adm.delta, 2u);
  EXPECT_EQ(adm.max_error, 2);
}

TEST(AdmissibleDelta, TreesAreZero) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph t = gen::random_tree(static_cast<VertexId>(2 + trial * 3), rng);
    const DistanceMatrix d = all_pairs_distances(t);
    const AdmissibleDelta adm = smallest_admissible_delta(t, static_cast<VertexId>(trial % t.n()), d);
    EXPECT_EQ(adm.delta, 0u);
    EXPECT_EQ(adm.max_error, 0);
    EXPECT_DOUBLE_EQ(adm.avg_error, 0.0);
  }
}

TEST(SampledRows, MatchFullEstimateRows) {
  std::mt19937_64 rng(55);
  const Graph g = gen::random_connected(45, 0.08, rng);
  const BfsLayering L = bfs(g, 3);
  const DistanceMatrix d = all_pairs_distances(g);
  const auto sources = deepest_vertices(L, 6);
  ASSERT_EQ(sources.size(), 6u);
  for (std::size_t i = 1; i < sources.size(); ++i) {
    const auto a = sources[i - 1], b = sources[i];
    EXPECT_TRUE(L.height[a] > L.height[b] || (L.height[a] == L.height[b] && a < b));
  }
  for (Distance lambda = 0; lambda < 4; ++lambda) {
    const DistanceEstimate full = approximate_all_distances(g, lambda, 3);
    const SampledRows rows = estimate_rows(g, L, lambda, sources);
    for (std::size_t i = 0; i < sources.size(); ++i) {
      for (VertexId y = 0; y < g.n(); ++y) {
        EXPECT_EQ(rows.rows[i][y], full(sources[i], y));
        EXPECT_EQ(rows.exact[i][y], d(sources[i], y));
      }
    }
  }
  const AdmissibleDelta sampled = smallest_admissible_delta_sampled(g, 3, sources);
  EXPECT_LE(sampled.max_error, std::int64_t{sampled.delta} + 1);
}
