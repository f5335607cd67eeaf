#include <benchmark/benchmark.h>

#include <random>

#include "hyperecc/dist_approx.hpp"
#include "hyperecc/ecc_approx.hpp"
#include "hyperecc/exact.hpp"
#include "hyperecc/generators.hpp"
#include "hyperecc/graph.hpp"

namespace {

using namespace hyperecc;

Graph sparse_graph(VertexId n) {
  std::mt19937_64 rng(7);
  return gen::random_sparse_connected(n, n, rng);
}

void BM_Bfs(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<VertexId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bfs(g, 0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_Bfs)->Arg(10'000)->Arg(100'000);

void BM_RefinedEccentricities(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<VertexId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_eccentricities(g, EccStrategy::kRefined));
}
BENCHMARK(BM_RefinedEccentricities)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_AllPairsDistances(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<VertexId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_AllPairsDistances)->Arg(1'000)->Arg(2'000)->Unit(benchmark::kMillisecond);

void BM_DistanceSweep(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const Graph g = gen::random_tree(static_cast<VertexId>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(approximate_all_distances(g, Distance{1}, VertexId{0}));
}
BENCHMARK(BM_DistanceSweep)->Arg(500)->Arg(2'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
