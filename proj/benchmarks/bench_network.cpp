#include <benchmark/benchmark.h>

#include "syllnet/corpus.hpp"
#include "syllnet/network.hpp"
#include "syllnet/syllabifier.hpp"

namespace {

const std::vector<syllnet::SyllabifiedWord>& corpus_words() {
  static const auto words = [] {
    const std::vector<std::filesystem::path> paths{std::filesystem::path(SYLLNET_DATA_DIR) / "corpus"};
    std::vector<syllnet::Token> tokens;
    for (const auto& doc : syllnet::load_corpus(paths, "bench")) {
      auto t = syllnet::tokenize(doc);
      tokens.insert(tokens.end(), t.begin(), t.end());
    }
    return syllnet::syllabify_all(tokens, syllnet::RuleSet::croatian());
  }();
  return words;
}

void BM_BuildNetwork(benchmark::State& state) {
  const auto variant = syllnet::NetworkVariant::all()[static_cast<std::size_t>(state.range(0))];
  const auto& words = corpus_words();
  for (auto _ : state) {
    auto net = syllnet::build_network(words, variant);
    benchmark::DoNotOptimize(net.edge_count());
  }
  state.SetLabel(variant.name());
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * words.size()));
}
BENCHMARK(BM_BuildNetwork)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_FilterKCore(benchmark::State& state) {
  const auto net = syllnet::build_network(corpus_words(), syllnet::NetworkVariant{});
  for (auto _ : state) {
    auto core = syllnet::filter_min_degree(net, static_cast<std::size_t>(state.range(0)), true);
    benchmark::DoNotOptimize(core.node_count());
  }
}
BENCHMARK(BM_FilterKCore)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
