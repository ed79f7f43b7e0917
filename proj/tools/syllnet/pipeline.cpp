#include "pipeline.hpp"

#include <cstdio>
#include <ostream>

#include "syllnet/error.hpp"

namespace syllnet::cli {
namespace {

std::string extension_for(GraphFileFormat format) {
  switch (format) {
    case GraphFileFormat::kGraphMl: return ".graphml";
    case GraphFileFormat::kGexf: return ".gexf";
    case GraphFileFormat::kEdgeCsv: return ".csv";
  }
  return ".graphml";
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string combined_label(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "+") + l;
  return out;
}

}  // namespace

void PipelineConfig::validate() const {
  if (inputs.empty()) throw UsageError("no input corpus given");
  for (const auto& group : inputs) {
    if (group.label.empty()) throw UsageError("input group label must not be empty");
    if (group.paths.empty()) throw UsageError("input group '" + group.label + "' has no paths");
    for (const auto& p : group.paths) {
      std::error_code ec;
      if (!std::filesystem::exists(p, ec)) throw IoError(p.string(), "no such file or directory");
    }
  }
  if (er_samples == 0) throw UsageError("--samples must be at least 1");
  if (top_k == 0) throw UsageError("--top must be at least 1");
  if (metrics.threads == 0) throw UsageError("--threads must be at least 1");
  if (iterative_filter && min_degree == 0) {
    throw UsageError("--iterative-filter needs --min-degree >= 1");
  }
}

BuiltNetworks build_from_corpora(const std::vector<InputGroup>& inputs,
                                 const TokenizerOptions& tokenizer, const RuleSet& rules,
                                 NetworkVariant variant, std::size_t min_degree,
                                 bool iterative_filter) {
  BuiltNetworks built;
  std::vector<SyllableNetwork> raw;
  for (const auto& group : inputs) {
    EdgeAccumulator acc(variant);
    for (const auto& doc : load_corpus(group.paths, group.label)) {
      SyllabificationStats stats;
      const auto tokens = tokenize(doc, tokenizer);
      for (const auto& word : syllabify_all(tokens, rules, &stats)) acc.add_word(word);
      built.stats.tokens += stats.tokens;
      built.stats.syllabified += stats.syllabified;
      built.stats.skipped_no_nucleus += stats.skipped_no_nucleus;
    }
    built.labels.push_back(group.label);
    raw.push_back(acc.finish({group.label}));
  }
  built.combined = merge(raw);
  auto filter = [&](const SyllableNetwork& net) {
    return min_degree == 0 ? net : filter_min_degree(net, min_degree, iterative_filter);
  };
  for (const auto& net : raw) built.per_group.push_back(filter(net));
  built.combined = filter(built.combined);
  return built;
}

PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& log) {
  config.validate();
  namespace fs = std::filesystem;
  PipelineResult result;

  log << "building " << config.variant.name() << " network from " << config.inputs.size()
      << " input group(s)\n";
  result.networks = build_from_corpora(config.inputs, config.tokenizer, config.rules,
                                       config.variant, config.min_degree, config.iterative_filter);
  const auto& built = result.networks;
  const SyllableNetwork& net = built.combined;
  if (net.empty()) throw EmptyNetworkError("pipeline (no syllables survived tokenization and filtering)");

  const fs::path dir = config.output_dir;
  auto artifact = [&](const std::string& name) {
    result.artifacts.push_back(dir / name);
    return dir / name;
  };

  export_graph(net, config.graph_format, artifact("network" + extension_for(config.graph_format)));

  log << "analysing N=" << net.node_count() << " K=" << net.edge_count() << "\n";
  result.metrics = analyze(net, config.metrics);
  const auto top = top_k_by_degree(net, config.top_k);
  write_text_file(artifact("metrics.json"), metrics_json(result.metrics, &top));
  emit_degree_distribution(degree_distribution(net), artifact("degree_distribution.tsv"));
  result.artifacts.push_back(loglog_companion(dir / "degree_distribution.tsv"));

  log << "comparing against " << config.er_samples << " ER sample(s)\n";
  result.comparison = compare_with_er(net, config.er_samples, config.seed, config.metrics);
  write_text_file(artifact("comparison.json"), comparison_json(result.comparison));

  // Tables: each group, plus the merged network when there are several.
  const bool multi = built.per_group.size() > 1;
  std::vector<std::pair<std::string, const SyllableNetwork*>> listed;
  for (std::size_t i = 0; i < built.per_group.size(); ++i) {
    listed.emplace_back(built.labels[i], &built.per_group[i]);
  }
  if (multi) listed.emplace_back(combined_label(built.labels), &net);

  TableInputs inputs;
  for (const auto& [label, n] : listed) {
    inputs.counts.push_back(NetworkCounts{label, n->node_count(), n->edge_count()});
    inputs.top.push_back(LabeledTopList{label, top_k_by_degree(*n, config.top_k)});
  }
  if (config.variant.linking == Linking::kCoOccurrence) {
    for (const auto& [label, n] : listed) {
      if (n == &net) {
        inputs.comparisons.push_back(LabeledComparison{label, result.comparison});
      } else if (!n->empty()) {
        inputs.comparisons.push_back(
            LabeledComparison{label, compare_with_er(*n, config.er_samples, config.seed, config.metrics)});
      }
    }
  }
  if (config.variant.linking == Linking::kFirstNeighbour && config.variant.directed) {
    inputs.first_neighbour = summarize_first_neighbour(combined_label(built.labels), net,
                                                       config.er_samples, config.seed,
                                                       config.metrics);
  }
  auto emit = [&](TableSpec spec, const std::string& name) {
    const auto table = emit_table(spec, inputs);
    write_text_file(artifact(name + ".txt"), table.to_text());
    write_text_file(artifact(name + ".csv"), table.to_csv());
  };
  emit(TableSpec::kTable1Counts, "table1");
  if (!inputs.comparisons.empty()) emit(TableSpec::kTable2Metrics, "table2");
  if (inputs.first_neighbour) emit(TableSpec::kTable3FirstNeighbour, "table3");
  emit(TableSpec::kTable4TopSyllables, "table4");

  const auto& m = result.metrics;
  const auto& c = result.comparison;
  out << "network   " << net.variant().name() << " [" << combined_label(built.labels) << "]\n"
      << "tokens    " << built.stats.tokens << " (syllabified " << built.stats.syllabified
      << ", no nucleus " << built.stats.skipped_no_nucleus << ")\n"
      << "N         " << m.n << "\n"
      << "K         " << m.k << "\n"
      << "<k>       " << fixed(m.avg_degree, 2) << "\n"
      << "D         " << m.diameter << "\n"
      << "L         " << fixed(m.avg_path_length, 3) << "\n"
      << "C         " << fixed(m.avg_clustering, 3) << "\n"
      << "C_ER      " << fixed(c.er_mean.avg_clustering, 3) << " (" << c.samples
      << " samples, seed " << c.seed << ")\n"
      << "C/C_ER    " << (c.clustering_ratio ? fixed(*c.clustering_ratio, 2) : std::string("undefined"))
      << "\n";
  log << "wrote " << result.artifacts.size() << " artifacts to " << dir.string() << "\n";
  return result;
}

}  // namespace syllnet::cli
