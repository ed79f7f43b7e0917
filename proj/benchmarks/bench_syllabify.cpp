#include <benchmark/benchmark.h>

#include "syllnet/corpus.hpp"
#include "syllnet/syllabifier.hpp"

namespace {

std::vector<syllnet::Token> corpus_tokens() {
  const std::vector<std::filesystem::path> paths{std::filesystem::path(SYLLNET_DATA_DIR) / "corpus"};
  std::vector<syllnet::Token> tokens;
  for (const auto& doc : syllnet::load_corpus(paths, "bench")) {
    auto t = syllnet::tokenize(doc);
    tokens.insert(tokens.end(), t.begin(), t.end());
  }
  return tokens;
}

void BM_Tokenize(benchmark::State& state) {
  const std::vector<std::filesystem::path> paths{std::filesystem::path(SYLLNET_DATA_DIR) / "corpus"};
  const auto docs = syllnet::load_corpus(paths, "bench");
  std::size_t bytes = 0;
  for (const auto& d : docs) bytes += d.text.size();
  for (auto _ : state) {
    std::size_t n = 0;
    for (const auto& d : docs) n += syllnet::tokenize(d).size();
    benchmark::DoNotOptimize(n);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_Tokenize)->Unit(benchmark::kMillisecond);

void BM_SyllabifyCorpus(benchmark::State& state) {
  const auto tokens = corpus_tokens();
  const auto rules = syllnet::RuleSet::croatian();
  for (auto _ : state) {
    auto words = syllnet::syllabify_all(tokens, rules);
    benchmark::DoNotOptimize(words.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * tokens.size()));
}
BENCHMARK(BM_SyllabifyCorpus)->Unit(benchmark::kMillisecond);

}  // namespace
