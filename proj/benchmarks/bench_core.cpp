#include <benchmark/benchmark.h>

#include "sftlab/group_oracle.hpp"
#include "sftlab/sofic.hpp"

using namespace sftlab;

static void BM_MatrixPower(benchmark::State& state) {
  AdjacencyMatrix a = AdjacencyMatrix::golden_mean();
  long k = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(matrix_power(a, k));
}
BENCHMARK(BM_MatrixPower)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_PerronEigendata(benchmark::State& state) {
  AdjacencyMatrix a =
      AdjacencyMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  for (auto _ : state)
    benchmark::DoNotOptimize(perron_eigendata(a));
}
BENCHMARK(BM_PerronEigendata);

static void BM_GrowthSample(benchmark::State& state) {
  AdjacencyMatrix a = AdjacencyMatrix::golden_mean();
  std::vector<long> ns{state.range(0)};
  for (auto _ : state)
    benchmark::DoNotOptimize(growth_series(a, 1, ns));
}
BENCHMARK(BM_GrowthSample)->Arg(100)->Arg(1000);

static void BM_TowerBuild(benchmark::State& state) {
  LabeledGraph base = power_labeled(LabeledGraph::even_shift(), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_subgraph_tower(base, state.range(0)));
}
BENCHMARK(BM_TowerBuild)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_NormalSubgroups(benchmark::State& state) {
  ExplicitGroup a5 = ExplicitGroup::alternating(5);
  ExplicitGroup sq = ExplicitGroup::product(a5, a5);
  for (auto _ : state)
    benchmark::DoNotOptimize(normal_subgroups(sq));
}
BENCHMARK(BM_NormalSubgroups)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
