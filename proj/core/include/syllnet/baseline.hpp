#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "syllnet/metrics.hpp"
#include "syllnet/network.hpp"

namespace syllnet {

/// G(n, M): n nodes and exactly M edges drawn uniformly without replacement.
struct ERConfig {
  std::size_t nodes = 0;
  std::uint64_t edges = 0;
  std::size_t samples = 30;
  std::uint64_t seed = 42;

  static std::uint64_t max_edges(std::size_t nodes);
  /// TooManyEdgesError when edges > n(n-1)/2; UsageError when samples == 0.
  void validate() const;
};

/// Maps a pair index in [0, n(n-1)/2) to the pair (i, j), i < j, row-major.
std::pair<NodeId, NodeId> pair_from_index(std::uint64_t index, std::size_t nodes);

/// Sample `sample_index` of `config`; a pure function of (seed, sample_index,
/// nodes, edges). Nodes are labelled by zero-padded decimal indices so
/// label order equals numeric order.
SyllableNetwork generate_er(const ERConfig& config, std::size_t sample_index);

/// Edge probability 2K / (N (N - 1)), the expected clustering of G(n, M).
double expected_er_clustering(std::size_t nodes, std::uint64_t edges);

/// Per-metric values as plain doubles, used for sample means and deviations.
struct MetricSummary {
  double n = 0.0;
  double k = 0.0;
  double avg_degree = 0.0;
  double k_over_n = 0.0;
  double avg_path_length = 0.0;
  double diameter = 0.0;
  double avg_clustering = 0.0;
  double components = 0.0;
  double giant_fraction = 0.0;
};

struct ComparisonReport {
  NetworkMetrics real;
  MetricSummary er_mean;
  MetricSummary er_stddev;  // sample standard deviation; 0 for one sample
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t er_nodes = 0;
  std::uint64_t er_edges = 0;
  double expected_er_clustering = 0.0;
  /// real C / mean ER C; nullopt when the ER mean is 0.
  std::optional<double> clustering_ratio;
};

/// Directed or weighted networks are compared through their undirected
/// unweighted view, so the ER twin matches that view's N and K.
ComparisonReport compare_with_er(const SyllableNetwork& net, std::size_t samples,
                                 std::uint64_t seed, const MetricsOptions& options = {});

}  // namespace syllnet
