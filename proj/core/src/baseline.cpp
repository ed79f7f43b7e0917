#include "syllnet/baseline.hpp"

#include <cmath>
#include <random>
#include <unordered_map>
#include <vector>

#include "parallel.hpp"
#include "syllnet/error.hpp"

namespace syllnet {
namespace {

// Unbiased draw from [0, bound) by rejection; unlike
// std::uniform_int_distribution its output is the same on every standard
// library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t sample_index) {
  const auto idx = static_cast<std::uint64_t>(sample_index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::string> numbered_labels(std::size_t n) {
  const std::size_t width = n <= 1 ? 1 : std::to_string(n - 1).size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    labels.push_back(std::string(width - s.size(), '0') + s);
  }
  return labels;
}

MetricSummary as_summary(const NetworkMetrics& m) {
  return MetricSummary{static_cast<double>(m.n), static_cast<double>(m.k), m.avg_degree,
                       m.k_over_n, m.avg_path_length, static_cast<double>(m.diameter),
                       m.avg_clustering, static_cast<double>(m.components), m.giant_fraction};
}

template <typename F>
void for_each_field(MetricSummary& a, const MetricSummary& b, F f) {
  f(a.n, b.n);
  f(a.k, b.k);
  f(a.avg_degree, b.avg_degree);
  f(a.k_over_n, b.k_over_n);
  f(a.avg_path_length, b.avg_path_length);
  f(a.diameter, b.diameter);
  f(a.avg_clustering, b.avg_clustering);
  f(a.components, b.components);
  f(a.giant_fraction, b.giant_fraction);
}

}  // namespace

std::uint64_t ERConfig::max_edges(std::size_t nodes) {
  const auto n = static_cast<std::uint64_t>(nodes);
  return n < 2 ? 0 : n * (n - 1) / 2;
}

void ERConfig::validate() const {
  if (edges > max_edges(nodes)) throw TooManyEdgesError(nodes, edges);
  if (samples == 0) throw UsageError("ERConfig: samples must be at least 1");
  if (nodes > std::numeric_limits<NodeId>::max()) throw UsageError("ERConfig: too many nodes");
}

std::pair<NodeId, NodeId> pair_from_index(std::uint64_t index, std::size_t nodes) {
  const auto n = static_cast<std::uint64_t>(nodes);
  // Row i starts at offset(i) = i (2n - i - 1) / 2.
  auto offset = [n](std::uint64_t i) { return i * (2 * n - i - 1) / 2; };
  const double nd = static_cast<double>(n);
  const double approx =
      nd - 0.5 - std::sqrt((nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(index));
  std::uint64_t i = approx <= 0.0 ? 0 : static_cast<std::uint64_t>(approx);
  if (i > n - 2) i = n - 2;
  while (i > 0 && offset(i) > index) --i;
  while (i + 1 <= n - 2 && offset(i + 1) <= index) ++i;
  const std::uint64_t j = i + 1 + (index - offset(i));
  return {static_cast<NodeId>(i), static_cast<NodeId>(j)};
}

SyllableNetwork generate_er(const ERConfig& config, std::size_t sample_index) {
  config.validate();
  const std::uint64_t pairs = ERConfig::max_edges(config.nodes);
  auto rng = sample_rng(config.seed, sample_index);

  // Partial Fisher-Yates over the virtual array [0, pairs); only displaced
  // slots are stored.
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  displaced.reserve(static_cast<std::size_t>(config.edges) * 2);
  auto slot = [&](std::uint64_t i) {
    const auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(config.edges));
  for (std::uint64_t i = 0; i < config.edges; ++i) {
    const std::uint64_t j = i + uniform_below(rng, pairs - i);
    const std::uint64_t chosen = slot(j);
    displaced[j] = slot(i);
    const auto [a, b] = pair_from_index(chosen, config.nodes);
    edges.push_back(Edge{a, b, 1});
  }
  return SyllableNetwork::from_ids(NetworkVariant{Linking::kCoOccurrence, false, false},
                                   numbered_labels(config.nodes), std::move(edges),
                                   {"er:" + std::to_string(config.seed) + ":" +
                                    std::to_string(sample_index)});
}

double expected_er_clustering(std::size_t nodes, std::uint64_t edges) {
  if (nodes < 2) throw UndefinedMetricError("ER clustering needs at least two nodes");
  const double n = static_cast<double>(nodes);
  return 2.0 * static_cast<double>(edges) / (n * (n - 1.0));
}

ComparisonReport compare_with_er(const SyllableNetwork& net, std::size_t samples,
                                 std::uint64_t seed, const MetricsOptions& options) {
  if (net.empty()) throw EmptyNetworkError("compare_with_er");
  const bool transform = net.variant().directed || net.variant().weighted;
  const SyllableNetwork simple = transform ? to_undirected_unweighted(net) : SyllableNetwork{};
  const SyllableNetwork& view = transform ? simple : net;

  ERConfig config{view.node_count(), view.edge_count(), samples, seed};
  config.validate();

  ComparisonReport report;
  report.real = analyze(net, options);
  report.samples = samples;
  report.seed = seed;
  report.er_nodes = config.nodes;
  report.er_edges = config.edges;
  report.expected_er_clustering = expected_er_clustering(config.nodes, config.edges);

  MetricsOptions per_sample = options;
  per_sample.threads = 1;
  std::vector<MetricSummary> results(samples);
  detail::parallel_slices(samples, options.threads, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t s = b; s < e; ++s) results[s] = as_summary(analyze(generate_er(config, s), per_sample));
  });

  MetricSummary mean;
  for (const auto& r : results) for_each_field(mean, r, [](double& a, double b) { a += b; });
  for_each_field(mean, mean, [&](double& a, double) { a /= static_cast<double>(samples); });
  MetricSummary var;
  if (samples > 1) {
    for (const auto& r : results) {
      MetricSummary d = r;
      for_each_field(d, mean, [](double& a, double m) { a = (a - m) * (a - m); });
      for_each_field(var, d, [](double& a, double b) { a += b; });
    }
    for_each_field(var, var, [&](double& a, double) {
      a = std::sqrt(a / static_cast<double>(samples - 1));
    });
  }
  report.er_mean = mean;
  report.er_stddev = var;
  if (mean.avg_clustering > 0.0) {
    report.clustering_ratio = report.real.avg_clustering / mean.avg_clustering;
  }
  return report;
}

}  // namespace syllnet
