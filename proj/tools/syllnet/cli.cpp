#include "cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <ostream>

#include "pipeline.hpp"
#include "syllnet/error.hpp"

namespace syllnet::cli {
namespace {

namespace fs = std::filesystem;

struct CorpusFlags {
  bool strict = true;
  std::string alphabet;
  std::string rules_file;

  TokenizerOptions tokenizer() const {
    TokenizerOptions t;
    if (!alphabet.empty()) t.alphabet = Alphabet::from_string(alphabet);
    t.strict = strict;
    return t;
  }
  RuleSet rules() const { return rules_file.empty() ? RuleSet::croatian() : RuleSet::load(rules_file); }
};

struct VariantFlags {
  std::string linking = "co";
  bool directed = false;
  bool weighted = false;

  NetworkVariant variant() const {
    const auto l = parse_linking(linking);
    if (!l) throw UsageError("--linking must be 'co' or 'fn'");
    return NetworkVariant{*l, directed, weighted};
  }
};

struct ConventionFlags {
  DegreeConvention degree = DegreeConvention::kEndpointsPerNode;
  PathNormalization path = PathNormalization::kConnectedPairs;
  ClusteringAverage clustering = ClusteringAverage::kAllNodes;
  unsigned threads = 1;

  MetricsOptions options() const {
    if (threads == 0) throw UsageError("--threads must be at least 1");
    return MetricsOptions{degree, path, clustering, threads};
  }
};

void add_corpus_flags(CLI::App* app, CorpusFlags& f) {
  app->add_flag("--strict-alphabet,!--no-strict-alphabet", f.strict,
                "Drop tokens containing letters outside the alphabet (default on)");
  app->add_option("--alphabet", f.alphabet,
                  "Replace the default Croatian alphabet (abcčćdđefghijklmnoprsštuvzž)");
  app->add_option("--rules", f.rules_file, "Syllabification rule file (key = value)")
      ->check(CLI::ExistingFile);
}

void add_variant_flags(CLI::App* app, VariantFlags& f) {
  app->add_option("--linking", f.linking,
                  "co: link all syllables of a word; fn: link adjacent syllables only")
      ->check(CLI::IsMember({"co", "fn", "co_occurrence", "first_neighbour"}))
      ->capture_default_str();
  app->add_flag("--directed", f.directed, "Orient links from earlier to later syllable");
  app->add_flag("--weighted", f.weighted, "Count repeated links as edge weight");
}

void add_convention_flags(CLI::App* app, ConventionFlags& f) {
  const std::map<std::string, DegreeConvention> degree{
      {"2k-over-n", DegreeConvention::kEndpointsPerNode},
      {"k-over-n", DegreeConvention::kEdgesPerNode}};
  const std::map<std::string, PathNormalization> path{
      {"connected-pairs", PathNormalization::kConnectedPairs},
      {"literal", PathNormalization::kLiteral}};
  const std::map<std::string, ClusteringAverage> clustering{
      {"all-nodes", ClusteringAverage::kAllNodes},
      {"exclude-low-degree", ClusteringAverage::kExcludeLowDegree}};
  app->add_option("--degree-convention", f.degree,
                  "Average degree of undirected networks: 2k-over-n (mean degree, 2K/N; default) "
                  "or k-over-n (K/N, the figure printed in the published syllable-network "
                  "tables). Directed networks always report K/N.")
      ->transform(CLI::CheckedTransformer(degree, CLI::ignore_case));
  app->add_option("--path-normalization", f.path,
                  "Average path length over the largest component: connected-pairs (mean over "
                  "connected pairs of distinct nodes; default) or literal (d_i = sum_j d_ij / N "
                  "with the self-distance counted, L = sum_i d_i / N, as in the textbook "
                  "definition)")
      ->transform(CLI::CheckedTransformer(path, CLI::ignore_case));
  app->add_option("--clustering-average", f.clustering,
                  "Average clustering: all-nodes (degree < 2 nodes count as C_i = 0; default, "
                  "the textbook mean over all N nodes) or exclude-low-degree (mean over nodes "
                  "of degree >= 2, as some visualisation tools report)")
      ->transform(CLI::CheckedTransformer(clustering, CLI::ignore_case));
  app->add_option("--threads", f.threads, "Worker threads for analysis")->capture_default_str();
}

// "label=path" or a bare path (label taken from `fallback`).
InputGroup parse_group(const std::string& spec, const std::string& fallback) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) return InputGroup{fallback, {spec}};
  if (eq == 0) throw UsageError("empty label in '" + spec + "'");
  return InputGroup{spec.substr(0, eq), {spec.substr(eq + 1)}};
}

std::vector<InputGroup> collect_groups(const std::vector<std::string>& positional,
                                       const std::string& label,
                                       const std::vector<std::string>& groups) {
  std::vector<InputGroup> out;
  auto add = [&](InputGroup g) {
    for (auto& existing : out) {
      if (existing.label == g.label) {
        existing.paths.insert(existing.paths.end(), g.paths.begin(), g.paths.end());
        return;
      }
    }
    out.push_back(std::move(g));
  };
  for (const auto& p : positional) add(InputGroup{label, {p}});
  for (const auto& g : groups) add(parse_group(g, label));
  if (out.empty()) throw UsageError("no input given (positional paths or --group label=path)");
  return out;
}

GraphFileFormat resolve_format(const std::string& explicit_format, const fs::path& path) {
  if (explicit_format.empty()) return format_from_extension(path);
  const auto f = parse_graph_format(explicit_format);
  if (!f) throw UsageError("unknown graph format '" + explicit_format + "'");
  return *f;
}

SyllableNetwork load_network(const std::string& path, const std::string& format) {
  return import_graph(path, resolve_format(format, path));
}

void write_or_print(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_text_file(path, content);
  }
}

std::string render(const Table& t, const std::string& format) {
  return format == "csv" ? t.to_csv() : t.to_text();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"syllnet: syllable networks from text corpora, small-world metrics and "
               "Erdos-Renyi baselines"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "syllnet 0.1.0");

  // syllabify
  auto* syl = app.add_subcommand("syllabify", "Print words split into syllables (ma·te·ma·ti·ka)");
  std::vector<std::string> syl_words;
  CorpusFlags syl_corpus;
  syl->add_option("words", syl_words, "Words to syllabify")->required();
  add_corpus_flags(syl, syl_corpus);

  // build
  auto* build = app.add_subcommand("build", "Build a syllable network from text files");
  std::vector<std::string> build_inputs, build_groups;
  std::string build_label = "corpus", build_out, build_format;
  std::size_t build_min_degree = 0;
  bool build_iterative = false;
  CorpusFlags build_corpus;
  VariantFlags build_variant;
  build->add_option("inputs", build_inputs, "Text files or directories");
  build->add_option("--group", build_groups,
                    "label=path input group; several groups are merged into one network");
  build->add_option("--label", build_label, "Source label for positional inputs")->capture_default_str();
  build->add_option("-o,--output", build_out, "Network file (.graphml, .gexf, .csv)")->required();
  build->add_option("--format", build_format, "graphml | gexf | csv (default: from extension)");
  build->add_option("--min-degree", build_min_degree, "Drop nodes with degree below k (0: off)");
  build->add_flag("--iterative-filter", build_iterative, "Repeat --min-degree until stable (k-core)");
  add_corpus_flags(build, build_corpus);
  add_variant_flags(build, build_variant);

  // analyze
  auto* an = app.add_subcommand("analyze", "Compute N, K, <k>, L, D, C and degree statistics");
  std::string an_net, an_format, an_report, an_dist;
  std::size_t an_top = 10;
  ConventionFlags an_conv;
  an->add_option("network", an_net, "Network file")->required()->check(CLI::ExistingFile);
  an->add_option("--format", an_format, "Input format (default: from extension)");
  an->add_option("--report", an_report, "Metrics JSON path (default: stdout)");
  an->add_option("--degree-dist", an_dist, "Degree distribution TSV (plus .loglog.tsv companion)");
  an->add_option("--top", an_top, "Include the k highest-degree syllables")->capture_default_str();
  add_convention_flags(an, an_conv);

  // compare
  auto* cmp = app.add_subcommand("compare", "Compare a network with size-matched G(n,M) graphs");
  std::string cmp_net, cmp_format, cmp_out;
  std::size_t cmp_samples = 30;
  std::uint64_t cmp_seed = 42;
  ConventionFlags cmp_conv;
  cmp->add_option("network", cmp_net, "Network file")->required()->check(CLI::ExistingFile);
  cmp->add_option("--format", cmp_format, "Input format (default: from extension)");
  cmp->add_option("--samples", cmp_samples, "ER samples (1 = single instance)")->capture_default_str();
  cmp->add_option("--seed", cmp_seed, "Random seed")->capture_default_str();
  cmp->add_option("-o,--output", cmp_out, "Comparison JSON path (default: stdout)");
  add_convention_flags(cmp, cmp_conv);

  // export
  auto* ex = app.add_subcommand("export", "Convert, transform or filter a network file");
  std::string ex_in, ex_out, ex_from, ex_to;
  bool ex_transform = false, ex_iterative = false;
  std::size_t ex_min_degree = 0;
  ex->add_option("input", ex_in, "Network file")->required()->check(CLI::ExistingFile);
  ex->add_option("-o,--output", ex_out, "Output network file")->required();
  ex->add_option("--from", ex_from, "Input format (default: from extension)");
  ex->add_option("--to", ex_to, "Output format (default: from extension)");
  ex->add_flag("--undirected-unweighted", ex_transform, "Collapse direction and weights first");
  ex->add_option("--min-degree", ex_min_degree, "Drop nodes with degree below k (0: off)");
  ex->add_flag("--iterative-filter", ex_iterative, "Repeat --min-degree until stable (k-core)");

  // top
  auto* top = app.add_subcommand("top", "List the highest-degree syllables");
  std::string top_net, top_format, top_out, top_style = "text", top_label;
  std::size_t top_k = 10;
  top->add_option("network", top_net, "Network file")->required()->check(CLI::ExistingFile);
  top->add_option("--format", top_format, "Input format (default: from extension)");
  top->add_option("-k,--top", top_k, "Number of syllables")->capture_default_str();
  top->add_option("--label", top_label, "Column label (default: file stem)");
  top->add_option("--style", top_style, "text | csv")->check(CLI::IsMember({"text", "csv"}));
  top->add_option("-o,--output", top_out, "Output path (default: stdout)");

  // table
  auto* tab = app.add_subcommand("table", "Render a report table from network files");
  std::string tab_spec, tab_style = "text", tab_out;
  std::vector<std::string> tab_nets;
  std::size_t tab_samples = 30, tab_top = 10;
  std::uint64_t tab_seed = 42;
  ConventionFlags tab_conv;
  tab->add_option("spec", tab_spec, "table1 | table2 | table3 | table4")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3", "table4"}));
  tab->add_option("--net", tab_nets, "label=path of a network file (repeatable)")->required();
  tab->add_option("--samples", tab_samples, "ER samples for table2/table3")->capture_default_str();
  tab->add_option("--seed", tab_seed, "Random seed")->capture_default_str();
  tab->add_option("--top", tab_top, "Rows of table4")->capture_default_str();
  tab->add_option("--style", tab_style, "text | csv")->check(CLI::IsMember({"text", "csv"}));
  tab->add_option("-o,--output", tab_out, "Output path (default: stdout)");
  add_convention_flags(tab, tab_conv);

  // run
  auto* runc = app.add_subcommand("run", "Full pipeline: corpus to network, metrics, ER comparison, tables");
  std::vector<std::string> run_inputs, run_groups;
  std::string run_label = "corpus", run_out = "syllnet-out", run_graph_format = "graphml";
  PipelineConfig run_cfg;
  CorpusFlags run_corpus;
  VariantFlags run_variant;
  ConventionFlags run_conv;
  runc->add_option("inputs", run_inputs, "Text files or directories");
  runc->add_option("--group", run_groups, "label=path input group (repeatable)");
  runc->add_option("--label", run_label, "Source label for positional inputs")->capture_default_str();
  runc->add_option("--out-dir", run_out, "Artifact directory")->capture_default_str();
  runc->add_option("--graph-format", run_graph_format, "graphml | gexf | csv")
      ->check(CLI::IsMember({"graphml", "gexf", "csv"}))
      ->capture_default_str();
  runc->add_option("--min-degree", run_cfg.min_degree, "Drop nodes with degree below k (0: off)");
  runc->add_flag("--iterative-filter", run_cfg.iterative_filter, "Repeat --min-degree until stable");
  runc->add_option("--samples", run_cfg.er_samples, "ER samples")->capture_default_str();
  runc->add_option("--seed", run_cfg.seed, "Random seed; fixes every artifact")->capture_default_str();
  runc->add_option("--top", run_cfg.top_k, "Rows of the top-syllable report")->capture_default_str();
  add_corpus_flags(runc, run_corpus);
  add_variant_flags(runc, run_variant);
  add_convention_flags(runc, run_conv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorCategory::kUsage);
  }

  try {
    if (*syl) {
      const auto tokenizer = syl_corpus.tokenizer();
      const auto rules = syl_corpus.rules();
      bool failed = false;
      for (const auto& w : syl_words) {
        const auto tokens = tokenize(make_document("argument", w, "cli"), tokenizer);
        if (tokens.empty()) {
          err << "syllnet: '" << w << "' contains no alphabet letters\n";
          failed = true;
        }
        for (const auto& t : tokens) {
          try {
            out << syllabify(t, rules).joined() << "\n";
          } catch (const NoNucleusError& e) {
            err << "syllnet: " << e.what() << "\n";
            failed = true;
          }
        }
      }
      return failed ? static_cast<int>(ErrorCategory::kAnalysis) : 0;
    }

    if (*build) {
      const auto groups = collect_groups(build_inputs, build_label, build_groups);
      const auto format = resolve_format(build_format, build_out);
      if (build_iterative && build_min_degree == 0) {
        throw UsageError("--iterative-filter needs --min-degree >= 1");
      }
      const auto built = build_from_corpora(groups, build_corpus.tokenizer(), build_corpus.rules(),
                                            build_variant.variant(), build_min_degree,
                                            build_iterative);
      export_graph(built.combined, format, build_out);
      err << "syllnet: " << built.combined.variant().name() << " N=" << built.combined.node_count()
          << " K=" << built.combined.edge_count() << " tokens=" << built.stats.tokens
          << " no_nucleus=" << built.stats.skipped_no_nucleus << " -> " << build_out << "\n";
      return 0;
    }

    if (*an) {
      const auto net = load_network(an_net, an_format);
      const auto metrics = analyze(net, an_conv.options());
      const auto top_list = top_k_by_degree(net, an_top);
      write_or_print(an_report, metrics_json(metrics, &top_list), out);
      if (!an_dist.empty()) emit_degree_distribution(degree_distribution(net), an_dist);
      if (!an_report.empty()) {
        out << "N=" << metrics.n << " K=" << metrics.k << " <k>=" << metrics.avg_degree
            << " D=" << metrics.diameter << " L=" << metrics.avg_path_length
            << " C=" << metrics.avg_clustering << "\n";
      }
      return 0;
    }

    if (*cmp) {
      const auto net = load_network(cmp_net, cmp_format);
      const auto report = compare_with_er(net, cmp_samples, cmp_seed, cmp_conv.options());
      write_or_print(cmp_out, comparison_json(report), out);
      if (!cmp_out.empty()) {
        out << "C=" << report.real.avg_clustering << " C_ER=" << report.er_mean.avg_clustering
            << " ratio="
            << (report.clustering_ratio ? std::to_string(*report.clustering_ratio) : "undefined")
            << "\n";
      }
      return 0;
    }

    if (*ex) {
      auto net = load_network(ex_in, ex_from);
      if (ex_transform) net = to_undirected_unweighted(net);
      if (ex_iterative && ex_min_degree == 0) throw UsageError("--iterative-filter needs --min-degree >= 1");
      if (ex_min_degree > 0) net = filter_min_degree(net, ex_min_degree, ex_iterative);
      export_graph(net, resolve_format(ex_to, ex_out), ex_out);
      err << "syllnet: N=" << net.node_count() << " K=" << net.edge_count() << " -> " << ex_out << "\n";
      return 0;
    }

    if (*top) {
      const auto net = load_network(top_net, top_format);
      TableInputs inputs;
      inputs.top.push_back(LabeledTopList{top_label.empty() ? fs::path(top_net).stem().string() : top_label,
                                          top_k_by_degree(net, top_k)});
      write_or_print(top_out, render(emit_table(TableSpec::kTable4TopSyllables, inputs), top_style), out);
      return 0;
    }

    if (*tab) {
      const auto spec = *parse_table_spec(tab_spec);
      const auto options = tab_conv.options();
      TableInputs inputs;
      for (const auto& n : tab_nets) {
        const auto g = parse_group(n, fs::path(n).stem().string());
        const auto net = load_network(g.paths.front().string(), "");
        switch (spec) {
          case TableSpec::kTable1Counts:
            inputs.counts.push_back(NetworkCounts{g.label, net.node_count(), net.edge_count()});
            break;
          case TableSpec::kTable2Metrics:
            inputs.comparisons.push_back(
                LabeledComparison{g.label, compare_with_er(net, tab_samples, tab_seed, options)});
            break;
          case TableSpec::kTable3FirstNeighbour:
            if (inputs.first_neighbour) throw UsageError("table3 takes exactly one --net");
            inputs.first_neighbour = summarize_first_neighbour(g.label, net, tab_samples, tab_seed, options);
            break;
          case TableSpec::kTable4TopSyllables:
            inputs.top.push_back(LabeledTopList{g.label, top_k_by_degree(net, tab_top)});
            break;
        }
      }
      write_or_print(tab_out, render(emit_table(spec, inputs), tab_style), out);
      return 0;
    }

    if (*runc) {
      run_cfg.inputs = collect_groups(run_inputs, run_label, run_groups);
      run_cfg.tokenizer = run_corpus.tokenizer();
      run_cfg.rules = run_corpus.rules();
      run_cfg.variant = run_variant.variant();
      run_cfg.metrics = run_conv.options();
      run_cfg.output_dir = run_out;
      run_cfg.graph_format = *parse_graph_format(run_graph_format);
      run_pipeline(run_cfg, out, err);
      return 0;
    }
  } catch (const Error& e) {
    err << "syllnet: " << e.what() << "\n";
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    err << "syllnet: " << e.what() << "\n";
    return static_cast<int>(ErrorCategory::kAnalysis);
  }
  return static_cast<int>(ErrorCategory::kUsage);
}

}  // namespace syllnet::cli
