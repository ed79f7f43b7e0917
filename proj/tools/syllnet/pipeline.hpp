#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "syllnet/baseline.hpp"
#include "syllnet/corpus.hpp"
#include "syllnet/metrics.hpp"
#include "syllnet/network.hpp"
#include "syllnet/report_io.hpp"
#include "syllnet/syllabifier.hpp"

namespace syllnet::cli {

/// Files or directories sharing one source label ("wiki", "blog").
struct InputGroup {
  std::string label;
  std::vector<std::filesystem::path> paths;
};

struct PipelineConfig {
  std::vector<InputGroup> inputs;
  TokenizerOptions tokenizer;
  RuleSet rules = RuleSet::croatian();
  NetworkVariant variant;
  std::size_t min_degree = 0;  // 0 disables filtering
  bool iterative_filter = false;
  std::size_t er_samples = 30;
  std::uint64_t seed = 42;
  MetricsOptions metrics;
  std::filesystem::path output_dir = "syllnet-out";
  GraphFileFormat graph_format = GraphFileFormat::kGraphMl;
  std::size_t top_k = 10;

  /// UsageError for malformed settings, IoError for unresolvable inputs.
  void validate() const;
};

struct BuiltNetworks {
  std::vector<std::string> labels;
  std::vector<SyllableNetwork> per_group;  // one per input group, filtered
  SyllableNetwork combined;                // merge of all groups, filtered
  SyllabificationStats stats;
};

/// corpus -> tokens -> syllables -> one network per group, merged, filtered.
BuiltNetworks build_from_corpora(const std::vector<InputGroup>& inputs,
                                 const TokenizerOptions& tokenizer, const RuleSet& rules,
                                 NetworkVariant variant, std::size_t min_degree,
                                 bool iterative_filter);

struct PipelineResult {
  BuiltNetworks networks;
  NetworkMetrics metrics;
  ComparisonReport comparison;
  std::vector<std::filesystem::path> artifacts;
};

/// Writes network, metrics.json, degree distribution TSVs, comparison.json
/// and table1-4 (text and CSV) under output_dir; prints a summary to `out`
/// and progress to `log`.
PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& log);

}  // namespace syllnet::cli
