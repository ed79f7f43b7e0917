#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syllnet/network.hpp"

namespace syllnet {

// All measures here are topological: edge weights are ignored. Directed
// networks are analysed through their undirected view (weak connectivity)
// except where an operation says otherwise.

enum class PathNormalization {
  /// Mean over unordered connected pairs of distinct nodes.
  kConnectedPairs,
  /// d_i = sum_j d_ij / n and L = sum_i d_i / n, n including the node itself.
  kLiteral,
};

enum class ClusteringAverage {
  kAllNodes,          // degree < 2 nodes contribute C_i = 0
  kExcludeLowDegree,  // mean over nodes with degree >= 2 only
};

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct NodeClustering {
  NodeId node = 0;
  std::size_t degree = 0;                  // k_i
  std::size_t links_among_neighbours = 0;  // E_i
  double coefficient = 0.0;                // C_i = 2 E_i / (k_i (k_i - 1)), 0 for k_i < 2
};

/// Hop counts over the largest connected component.
struct PathStatistics {
  std::size_t component_size = 0;
  std::uint64_t pair_count = 0;    // unordered pairs of distinct nodes
  std::uint64_t distance_sum = 0;  // sum of d_ij over those pairs
  std::uint32_t diameter = 0;

  /// Throws UndefinedMetricError when no connected pair exists.
  double average(PathNormalization normalization) const;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

struct DegreeDistribution {
  std::map<std::size_t, std::size_t> counts;  // degree -> number of nodes

  std::size_t total() const;
  /// (ln degree, ln count), skipping degree 0.
  std::vector<std::pair<double, double>> log_log_points() const;
  /// Least-squares line through log_log_points(); indicative only, not a
  /// power-law estimate. Slope and R^2 are NaN with fewer than two points.
  LinearFit log_log_fit() const;
};

enum class DegreeConvention {
  kEndpointsPerNode,  // 2K/N
  kEdgesPerNode,      // K/N
};

struct MetricsOptions {
  /// Applies to undirected networks; directed ones always report K/N.
  DegreeConvention degree_convention = DegreeConvention::kEndpointsPerNode;
  PathNormalization path_normalization = PathNormalization::kConnectedPairs;
  ClusteringAverage clustering_average = ClusteringAverage::kAllNodes;
  unsigned threads = 1;
};

struct NetworkMetrics {
  std::size_t n = 0;
  std::size_t k = 0;
  double avg_degree = 0.0;  // per options.degree_convention; K/N when directed
  double k_over_n = 0.0;    // K/N regardless of directedness
  double avg_path_length = 0.0;
  std::uint32_t diameter = 0;
  double avg_clustering = 0.0;
  std::size_t components = 0;
  double giant_fraction = 0.0;
  bool directed = false;
  /// Directed or weighted input was analysed via to_undirected_unweighted.
  bool transformed = false;
  MetricsOptions options;
};

/// 2K/N for undirected networks, K/N (mean out-degree) for directed ones.
double average_degree(const SyllableNetwork& net);

/// Breadth-first hop counts from `source`, indexed by NodeId; follows edge
/// direction on directed networks. Unreached nodes hold kUnreachable.
std::vector<std::uint32_t> shortest_paths_from(const SyllableNetwork& net, std::string_view source);

/// Weakly connected components, each sorted by NodeId; ordered by size
/// (largest first), ties by smallest member.
std::vector<std::vector<NodeId>> connected_components(const SyllableNetwork& net);

PathStatistics path_statistics(const SyllableNetwork& net, unsigned threads = 1);
double average_path_length(const SyllableNetwork& net,
                           PathNormalization normalization = PathNormalization::kConnectedPairs);
/// Largest hop distance between connected nodes of the largest component.
std::uint32_t diameter(const SyllableNetwork& net);
/// Largest finite hop distance along edge direction over all ordered pairs.
std::uint32_t directed_diameter(const SyllableNetwork& net, unsigned threads = 1);

NodeClustering clustering_local(const SyllableNetwork& net, std::string_view node);
std::vector<NodeClustering> clustering_all(const SyllableNetwork& net);
double clustering_average(const SyllableNetwork& net,
                          ClusteringAverage mode = ClusteringAverage::kAllNodes);

DegreeDistribution degree_distribution(const SyllableNetwork& net);

/// Descending degree, ties in bytewise label order; at most k entries.
std::vector<std::pair<std::string, std::size_t>> top_k_by_degree(const SyllableNetwork& net,
                                                                 std::size_t k);

/// Full metric set. Directed or weighted input is transformed first for L, D,
/// C and components; N, K and avg_degree describe the input as given.
NetworkMetrics analyze(const SyllableNetwork& net, const MetricsOptions& options = {});

}  // namespace syllnet
