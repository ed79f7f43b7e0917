#include <algorithm>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "syllnet/error.hpp"
#include "syllnet/report_io.hpp"
#include "syllnet/utf8.hpp"

namespace syllnet {
namespace {

using nlohmann::ordered_json;

std::string fixed(double value, int decimals) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

// Integral values print as integers, anything else with two decimals.
std::string count_like(double value) {
  if (std::floor(value) == value) return fixed(value, 0);
  return fixed(value, 2);
}

ordered_json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

ordered_json conventions_json(const NetworkMetrics& m) {
  ordered_json c;
  c["avg_degree"] =
      m.directed || m.options.degree_convention == DegreeConvention::kEdgesPerNode ? "K/N" : "2K/N";
  c["avg_path_length"] = m.options.path_normalization == PathNormalization::kLiteral
                             ? "literal_n_normalized"
                             : "connected_pairs";
  c["paths_over"] = "largest_component";
  c["diameter"] = "max_hop_distance";
  c["avg_clustering"] = m.options.clustering_average == ClusteringAverage::kAllNodes
                            ? "all_nodes"
                            : "exclude_degree_below_2";
  c["weights"] = "ignored";
  c["undirected_unweighted_view"] = m.transformed;
  return c;
}

ordered_json metrics_object(const NetworkMetrics& m) {
  ordered_json j;
  j["n"] = m.n;
  j["k"] = m.k;
  j["avg_degree"] = json_number(m.avg_degree);
  j["avg_path_length"] = json_number(m.avg_path_length);
  j["diameter"] = m.diameter;
  j["avg_clustering"] = json_number(m.avg_clustering);
  j["components"] = m.components;
  j["giant_fraction"] = json_number(m.giant_fraction);
  j["k_over_n"] = json_number(m.k_over_n);
  j["directed"] = m.directed;
  j["conventions"] = conventions_json(m);
  return j;
}

ordered_json summary_object(const MetricSummary& s) {
  ordered_json j;
  j["n"] = json_number(s.n);
  j["k"] = json_number(s.k);
  j["avg_degree"] = json_number(s.avg_degree);
  j["avg_path_length"] = json_number(s.avg_path_length);
  j["diameter"] = json_number(s.diameter);
  j["avg_clustering"] = json_number(s.avg_clustering);
  j["components"] = json_number(s.components);
  j["giant_fraction"] = json_number(s.giant_fraction);
  j["k_over_n"] = json_number(s.k_over_n);
  return j;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

std::string metrics_json(const NetworkMetrics& metrics, const TopList* top) {
  ordered_json j = metrics_object(metrics);
  if (top != nullptr) {
    ordered_json list = ordered_json::array();
    for (const auto& [syllable, degree] : *top) {
      list.push_back(ordered_json{{"syllable", syllable}, {"degree", degree}});
    }
    j["top_syllables"] = std::move(list);
  }
  return j.dump(2) + "\n";
}

std::string comparison_json(const ComparisonReport& report) {
  ordered_json j;
  j["real"] = metrics_object(report.real);
  ordered_json er;
  er["model"] = "G(n,M)";
  er["nodes"] = report.er_nodes;
  er["edges"] = report.er_edges;
  er["samples"] = report.samples;
  er["seed"] = report.seed;
  er["expected_clustering"] = json_number(report.expected_er_clustering);
  er["mean"] = summary_object(report.er_mean);
  er["stddev"] = summary_object(report.er_stddev);
  j["er"] = std::move(er);
  j["clustering_ratio"] =
      report.clustering_ratio ? json_number(*report.clustering_ratio) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string degree_distribution_tsv(const DegreeDistribution& dist) {
  std::string out = "degree\tcount\n";
  for (const auto& [degree, count] : dist.counts) {
    out += std::to_string(degree) + "\t" + std::to_string(count) + "\n";
  }
  return out;
}

std::string degree_distribution_loglog_tsv(const DegreeDistribution& dist) {
  std::string out = "ln_degree\tln_count\n";
  for (const auto& [x, y] : dist.log_log_points()) out += fixed(x, 9) + "\t" + fixed(y, 9) + "\n";
  const auto fit = dist.log_log_fit();
  out += "# ols_slope=" + fixed(fit.slope, 6) + " r_squared=" + fixed(fit.r_squared, 6) +
         " points=" + std::to_string(fit.points) + " (indicative only; not a power-law fit)\n";
  return out;
}

DegreeDistribution parse_degree_distribution_tsv(std::string_view content,
                                                 const std::string& origin) {
  DegreeDistribution dist;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = trim(line);
    if (view.empty() || view.front() == '#' || view == "degree\tcount") continue;
    const auto tab = view.find('\t');
    const std::string ctx = "line " + std::to_string(line_no);
    if (tab == std::string_view::npos) throw ParseError(origin, ctx, "expected 'degree<TAB>count'");
    try {
      std::size_t used_d = 0;
      std::size_t used_c = 0;
      const std::string d(view.substr(0, tab));
      const std::string c(view.substr(tab + 1));
      const auto degree = std::stoull(d, &used_d);
      const auto count = std::stoull(c, &used_c);
      if (used_d != d.size() || used_c != c.size()) throw std::invalid_argument("trailing text");
      if (!dist.counts.emplace(degree, count).second) {
        throw ParseError(origin, ctx, "duplicate degree " + d);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(origin, ctx, "expected two non-negative integers");
    }
  }
  return dist;
}

std::filesystem::path loglog_companion(const std::filesystem::path& path) {
  auto out = path;
  out.replace_extension();
  out += ".loglog.tsv";
  return out;
}

void emit_degree_distribution(const DegreeDistribution& dist, const std::filesystem::path& path) {
  write_text_file(path, degree_distribution_tsv(dist));
  write_text_file(loglog_companion(path), degree_distribution_loglog_tsv(dist));
}

std::optional<TableSpec> parse_table_spec(std::string_view text) {
  if (text == "table1" || text == "table1_counts") return TableSpec::kTable1Counts;
  if (text == "table2" || text == "table2_metrics") return TableSpec::kTable2Metrics;
  if (text == "table3" || text == "table3_fn_metrics") return TableSpec::kTable3FirstNeighbour;
  if (text == "table4" || text == "table4_top_syllables") return TableSpec::kTable4TopSyllables;
  return std::nullopt;
}

std::string Table::to_csv() const {
  std::string out;
  auto row_out = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  row_out(header);
  for (const auto& r : rows) row_out(r);
  return out;
}

std::string Table::to_text() const {
  std::vector<std::size_t> widths(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], utf8::length(row[i]));
    }
  };
  measure(header);
  for (const auto& r : rows) measure(r);

  std::string out = title + "\n";
  auto row_out = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      const std::size_t pad = widths[i] - utf8::length(row[i]);
      // First column left-aligned, numbers right-aligned.
      if (i == 0) {
        line += row[i] + std::string(pad, ' ');
      } else {
        line += std::string(pad, ' ') + row[i];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  row_out(header);
  for (const auto& r : rows) row_out(r);
  return out;
}

Table emit_table(TableSpec spec, const TableInputs& inputs) {
  Table t;
  switch (spec) {
    case TableSpec::kTable1Counts: {
      if (inputs.counts.empty()) throw MissingInputError("counts (table1 needs at least one network)");
      t.title = "SYLLABLE NETWORKS CONSTRUCTED";
      t.header.push_back("");
      std::vector<std::string> nodes{"Nodes (N)"};
      std::vector<std::string> links{"Links (K)"};
      for (const auto& c : inputs.counts) {
        t.header.push_back(c.label);
        nodes.push_back(std::to_string(c.n));
        links.push_back(std::to_string(c.k));
      }
      t.rows = {nodes, links};
      break;
    }
    case TableSpec::kTable2Metrics: {
      if (inputs.comparisons.empty()) {
        throw MissingInputError("comparisons (table2 needs at least one network with its ER baseline)");
      }
      t.title = "ESTIMATED NETWORK MEASURES FOR CO-OCCURRENCE SYLLABLE NETWORKS";
      t.header.push_back("");
      std::vector<std::string> n{"N"}, k{"⟨k⟩"}, d{"D"}, l{"L"}, c{"C"};
      for (const auto& [label, r] : inputs.comparisons) {
        t.header.push_back(label);
        t.header.push_back("ER_" + label);
        n.push_back(std::to_string(r.real.n));
        n.push_back(std::to_string(r.er_nodes));
        k.push_back(fixed(r.real.avg_degree, 2));
        k.push_back(fixed(r.er_mean.avg_degree, 2));
        d.push_back(std::to_string(r.real.diameter));
        d.push_back(count_like(r.er_mean.diameter));
        l.push_back(fixed(r.real.avg_path_length, 3));
        l.push_back(fixed(r.er_mean.avg_path_length, 3));
        c.push_back(fixed(r.real.avg_clustering, 3));
        c.push_back(fixed(r.er_mean.avg_clustering, 3));
      }
      t.rows = {n, k, d, l, c};
      break;
    }
    case TableSpec::kTable3FirstNeighbour: {
      if (!inputs.first_neighbour) {
        throw MissingInputError("first_neighbour (table3 needs a directed first-neighbour network)");
      }
      const auto& f = *inputs.first_neighbour;
      t.title = "ESTIMATED NETWORK MEASURES FOR THE FIRST-NEIGHBOUR SYLLABLE NETWORK";
      t.header = {"", f.label + "-Dir", f.label + "-Undir", "ER"};
      t.rows = {
          {"N", std::to_string(f.n), std::to_string(f.undirected.n), count_like(f.er.n)},
          {"K", std::to_string(f.directed_k), std::to_string(f.undirected.k), count_like(f.er.k)},
          {"D", std::to_string(f.directed_diameter), std::to_string(f.undirected.diameter),
           count_like(f.er.diameter)},
          // Clustering is defined on the undirected view only.
          {"C", "n/a", fixed(f.undirected.avg_clustering, 3), fixed(f.er.avg_clustering, 3)},
      };
      break;
    }
    case TableSpec::kTable4TopSyllables: {
      if (inputs.top.empty()) throw MissingInputError("top (table4 needs at least one top-k list)");
      t.title = "THE MOST FREQUENT SYLLABLES";
      std::size_t depth = 0;
      for (const auto& [label, list] : inputs.top) {
        t.header.push_back(label + " Syll.");
        t.header.push_back(label + " Degree");
        depth = std::max(depth, list.size());
      }
      for (std::size_t i = 0; i < depth; ++i) {
        std::vector<std::string> row;
        for (const auto& [label, list] : inputs.top) {
          if (i < list.size()) {
            row.push_back(list[i].first);
            row.push_back(std::to_string(list[i].second));
          } else {
            row.emplace_back();
            row.emplace_back();
          }
        }
        t.rows.push_back(std::move(row));
      }
      break;
    }
  }
  return t;
}

FirstNeighbourSummary summarize_first_neighbour(std::string label, const SyllableNetwork& net,
                                                std::size_t samples, std::uint64_t seed,
                                                const MetricsOptions& options) {
  if (!net.variant().directed) {
    throw UsageError("table3 expects a directed network (got " + net.variant().name() + ")");
  }
  const auto report = compare_with_er(net, samples, seed, options);
  FirstNeighbourSummary s;
  s.label = std::move(label);
  s.n = net.node_count();
  s.directed_k = net.edge_count();
  s.directed_diameter = directed_diameter(net, options.threads);
  s.undirected = analyze(to_undirected_unweighted(net), options);
  s.er = report.er_mean;
  return s;
}

}  // namespace syllnet
