#include <benchmark/benchmark.h>

#include "syllnet/baseline.hpp"

namespace {

void BM_GenerateEr(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const syllnet::ERConfig config{n, static_cast<std::uint64_t>(state.range(1)), 1, 42};
  std::size_t sample = 0;
  for (auto _ : state) benchmark::DoNotOptimize(syllnet::generate_er(config, sample++).edge_count());
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(1));
}
BENCHMARK(BM_GenerateEr)
    ->Args({2000, 36202})
    ->Args({20000, 200000})
    ->Args({100, 4950})
    ->Unit(benchmark::kMillisecond);

void BM_CompareWithEr(benchmark::State& state) {
  const auto net = syllnet::generate_er({2000, 36202, 1, 1}, 0);
  syllnet::MetricsOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto report = syllnet::compare_with_er(net, 10, 42, opts);
    benchmark::DoNotOptimize(report.er_mean.avg_clustering);
  }
}
BENCHMARK(BM_CompareWithEr)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
