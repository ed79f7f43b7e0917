#include <benchmark/benchmark.h>

#include "syllnet/baseline.hpp"
#include "syllnet/metrics.hpp"

namespace {

syllnet::SyllableNetwork er_graph(std::int64_t n, double avg_degree) {
  const auto k = static_cast<std::uint64_t>(avg_degree * static_cast<double>(n) / 2.0);
  return syllnet::generate_er({static_cast<std::size_t>(n), k, 1, 7}, 0);
}

void BM_PathStatistics(benchmark::State& state) {
  const auto net = er_graph(state.range(0), 20.0);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(syllnet::path_statistics(net, threads).distance_sum);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PathStatistics)
    ->ArgsProduct({{500, 1000, 2000, 4000}, {1}})
    ->Args({4000, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_Clustering(benchmark::State& state) {
  const auto net = er_graph(state.range(0), 36.0);
  for (auto _ : state) benchmark::DoNotOptimize(syllnet::clustering_average(net));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Clustering)->RangeMultiplier(2)->Range(500, 8000)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto net = er_graph(2000, 36.2);
  syllnet::MetricsOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(syllnet::analyze(net, opts).avg_clustering);
}
BENCHMARK(BM_Analyze)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
