#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syllnet/baseline.hpp"
#include "syllnet/metrics.hpp"
#include "syllnet/network.hpp"

namespace syllnet {

// ---------------------------------------------------------------------------
// Graph files
// ---------------------------------------------------------------------------

enum class GraphFileFormat { kGraphMl, kGexf, kEdgeCsv };

std::string_view to_string(GraphFileFormat format);
/// "graphml", "gexf", "csv" / "edge_csv".
std::optional<GraphFileFormat> parse_graph_format(std::string_view text);
/// .graphml, .gexf or .csv; UsageError otherwise.
GraphFileFormat format_from_extension(const std::filesystem::path& path);

/// GraphML 1.0 / GEXF 1.2 subsets or "source,target,weight" CSV. Node ids are
/// the syllables. Linking rule, weightedness and provenance travel as graph
/// metadata so a file read back yields an equal network.
std::string serialize_graph(const SyllableNetwork& net, GraphFileFormat format);
SyllableNetwork parse_graph(std::string_view content, GraphFileFormat format,
                            const std::string& origin = "<memory>");

void export_graph(const SyllableNetwork& net, GraphFileFormat format,
                  const std::filesystem::path& path);
SyllableNetwork import_graph(const std::filesystem::path& path, GraphFileFormat format);
inline SyllableNetwork import_graph(const std::filesystem::path& path) {
  return import_graph(path, format_from_extension(path));
}

// ---------------------------------------------------------------------------
// Metrics and comparison reports (JSON)
// ---------------------------------------------------------------------------

using TopList = std::vector<std::pair<std::string, std::size_t>>;

/// Fields: n, k, avg_degree, avg_path_length, diameter, avg_clustering,
/// components, giant_fraction, k_over_n, conventions{...}, and top_syllables
/// when `top` is given.
std::string metrics_json(const NetworkMetrics& metrics, const TopList* top = nullptr);
std::string comparison_json(const ComparisonReport& report);

// ---------------------------------------------------------------------------
// Degree distributions
// ---------------------------------------------------------------------------

/// "degree\tcount" header plus one ascending row per degree.
std::string degree_distribution_tsv(const DegreeDistribution& dist);
/// Natural-log coordinates plus a "# ols_slope=... r_squared=..." footer.
std::string degree_distribution_loglog_tsv(const DegreeDistribution& dist);
DegreeDistribution parse_degree_distribution_tsv(std::string_view content,
                                                 const std::string& origin = "<memory>");
/// dist.tsv -> dist.loglog.tsv
std::filesystem::path loglog_companion(const std::filesystem::path& path);
/// Writes `path` and its log-log companion.
void emit_degree_distribution(const DegreeDistribution& dist, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Report tables
// ---------------------------------------------------------------------------

enum class TableSpec {
  kTable1Counts,          // N and K per network
  kTable2Metrics,         // N, <k>, D, L, C for each network and its ER twin
  kTable3FirstNeighbour,  // directed / undirected first-neighbour network vs ER
  kTable4TopSyllables,    // highest-degree syllables per network
};

std::optional<TableSpec> parse_table_spec(std::string_view text);  // "table1".."table4"

struct NetworkCounts {
  std::string label;
  std::size_t n = 0;
  std::size_t k = 0;
};

struct LabeledComparison {
  std::string label;
  ComparisonReport report;
};

struct FirstNeighbourSummary {
  std::string label;
  std::size_t n = 0;
  std::size_t directed_k = 0;
  std::uint32_t directed_diameter = 0;
  NetworkMetrics undirected;
  MetricSummary er;
};

struct LabeledTopList {
  std::string label;
  TopList top;
};

struct TableInputs {
  std::vector<NetworkCounts> counts;
  std::vector<LabeledComparison> comparisons;
  std::optional<FirstNeighbourSummary> first_neighbour;
  std::vector<LabeledTopList> top;
};

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  std::string to_text() const;
};

/// Counts print as integers, <k> with 2 decimals, L and C with 3.
Table emit_table(TableSpec spec, const TableInputs& inputs);

/// Table-3 inputs for a directed first-neighbour network.
FirstNeighbourSummary summarize_first_neighbour(std::string label, const SyllableNetwork& net,
                                                std::size_t samples, std::uint64_t seed,
                                                const MetricsOptions& options = {});

/// Writes `content` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace syllnet
