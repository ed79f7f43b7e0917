#include "syllnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parallel.hpp"
#include "syllnet/error.hpp"

namespace syllnet {
namespace {

// Compressed adjacency lists, sorted and duplicate-free.
struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> targets;

  std::span<const NodeId> of(NodeId v) const {
    return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
  std::size_t size() const { return offsets.size() - 1; }
};

Adjacency make_adjacency(const SyllableNetwork& net, bool follow_direction) {
  const std::size_t n = net.node_count();
  const bool both_ways = !(follow_direction && net.variant().directed);
  std::vector<std::vector<NodeId>> lists(n);
  for (const auto& e : net.edges()) {
    lists[e.source].push_back(e.target);
    if (both_ways) lists[e.target].push_back(e.source);
  }
  Adjacency adj;
  adj.offsets.reserve(n + 1);
  adj.offsets.push_back(0);
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    adj.targets.insert(adj.targets.end(), l.begin(), l.end());
    adj.offsets.push_back(adj.targets.size());
  }
  return adj;
}

// BFS into `dist` (kUnreachable-filled by the caller); returns the visit order.
void bfs(const Adjacency& adj, NodeId source, std::vector<std::uint32_t>& dist,
         std::vector<NodeId>& queue) {
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId u : adj.of(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
}

std::vector<std::vector<NodeId>> components_of(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (NodeId u : adj.of(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

void require_undirected(const SyllableNetwork& net, const char* op) {
  if (net.variant().directed) throw RequiresUndirectedError(op);
}

NodeClustering cluster_node(const Adjacency& adj, NodeId v, std::vector<bool>& marked) {
  const auto nbrs = adj.of(v);
  NodeClustering c;
  c.node = v;
  c.degree = nbrs.size();
  if (c.degree < 2) return c;
  for (NodeId u : nbrs) marked[u] = true;
  std::size_t links = 0;
  for (NodeId u : nbrs) {
    for (NodeId w : adj.of(u)) {
      if (w > u && marked[w]) ++links;
    }
  }
  for (NodeId u : nbrs) marked[u] = false;
  c.links_among_neighbours = links;
  c.coefficient = 2.0 * static_cast<double>(links) /
                  (static_cast<double>(c.degree) * static_cast<double>(c.degree - 1));
  return c;
}

PathStatistics paths_over_largest_component(const Adjacency& adj, unsigned threads) {
  PathStatistics stats;
  const auto comps = components_of(adj);
  if (comps.empty()) return stats;
  const auto& giant = comps.front();
  stats.component_size = giant.size();

  struct Partial {
    std::uint64_t sum = 0;
    std::uint32_t max = 0;
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, giant.size()));
  std::vector<Partial> partials(workers);
  detail::parallel_slices(giant.size(), threads, [&](std::size_t w, std::size_t b, std::size_t e) {
    std::vector<std::uint32_t> dist(adj.size(), kUnreachable);
    std::vector<NodeId> queue;
    Partial p;
    for (std::size_t i = b; i < e; ++i) {
      bfs(adj, giant[i], dist, queue);
      for (NodeId v : queue) {
        p.sum += dist[v];
        p.max = std::max(p.max, dist[v]);
        dist[v] = kUnreachable;
      }
    }
    partials[w] = p;
  });
  std::uint64_t ordered_sum = 0;
  for (const auto& p : partials) {
    ordered_sum += p.sum;
    stats.diameter = std::max(stats.diameter, p.max);
  }
  const std::uint64_t size = giant.size();
  stats.distance_sum = ordered_sum / 2;
  stats.pair_count = size * (size - 1) / 2;
  return stats;
}

}  // namespace

double PathStatistics::average(PathNormalization normalization) const {
  if (pair_count == 0) {
    throw UndefinedMetricError("average path length needs a connected pair of distinct nodes");
  }
  if (normalization == PathNormalization::kLiteral) {
    const double n = static_cast<double>(component_size);
    return 2.0 * static_cast<double>(distance_sum) / (n * n);
  }
  return static_cast<double>(distance_sum) / static_cast<double>(pair_count);
}

std::size_t DegreeDistribution::total() const {
  std::size_t sum = 0;
  for (const auto& [degree, count] : counts) sum += count;
  return sum;
}

std::vector<std::pair<double, double>> DegreeDistribution::log_log_points() const {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [degree, count] : counts) {
    if (degree == 0 || count == 0) continue;
    pts.emplace_back(std::log(static_cast<double>(degree)), std::log(static_cast<double>(count)));
  }
  return pts;
}

LinearFit DegreeDistribution::log_log_fit() const {
  const auto pts = log_log_points();
  LinearFit fit;
  fit.points = pts.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (pts.size() < 2) {
    fit.slope = fit.intercept = fit.r_squared = nan;
    return fit;
  }
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (const auto& [x, y] : pts) {
    const double r = y - (fit.intercept + fit.slope * x);
    ss_res += r * r;
  }
  fit.r_squared = syy == 0.0 ? nan : 1.0 - ss_res / syy;
  return fit;
}

double average_degree(const SyllableNetwork& net) {
  if (net.empty()) throw EmptyNetworkError("average_degree");
  const double n = static_cast<double>(net.node_count());
  const double k = static_cast<double>(net.edge_count());
  return net.variant().directed ? k / n : 2.0 * k / n;
}

std::vector<std::uint32_t> shortest_paths_from(const SyllableNetwork& net,
                                               std::string_view source) {
  const auto s = net.find(source);
  if (!s) throw NodeNotFoundError(std::string(source));
  const auto adj = make_adjacency(net, true);
  std::vector<std::uint32_t> dist(net.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  bfs(adj, *s, dist, queue);
  return dist;
}

std::vector<std::vector<NodeId>> connected_components(const SyllableNetwork& net) {
  return components_of(make_adjacency(net, false));
}

PathStatistics path_statistics(const SyllableNetwork& net, unsigned threads) {
  return paths_over_largest_component(make_adjacency(net, false), threads);
}

double average_path_length(const SyllableNetwork& net, PathNormalization normalization) {
  return path_statistics(net).average(normalization);
}

std::uint32_t diameter(const SyllableNetwork& net) {
  const auto stats = path_statistics(net);
  if (stats.pair_count == 0) {
    throw UndefinedMetricError("diameter needs a connected pair of distinct nodes");
  }
  return stats.diameter;
}

std::uint32_t directed_diameter(const SyllableNetwork& net, unsigned threads) {
  const auto adj = make_adjacency(net, true);
  const std::size_t n = adj.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  std::vector<std::uint32_t> partial(workers, 0);
  detail::parallel_slices(n, threads, [&](std::size_t w, std::size_t b, std::size_t e) {
    std::vector<std::uint32_t> dist(n, kUnreachable);
    std::vector<NodeId> queue;
    for (std::size_t s = b; s < e; ++s) {
      bfs(adj, static_cast<NodeId>(s), dist, queue);
      for (NodeId v : queue) {
        partial[w] = std::max(partial[w], dist[v]);
        dist[v] = kUnreachable;
      }
    }
  });
  const std::uint32_t d = partial.empty() ? 0 : *std::max_element(partial.begin(), partial.end());
  if (d == 0) throw UndefinedMetricError("directed diameter needs a reachable pair of distinct nodes");
  return d;
}

NodeClustering clustering_local(const SyllableNetwork& net, std::string_view node) {
  require_undirected(net, "clustering_local");
  const auto v = net.find(node);
  if (!v) throw NodeNotFoundError(std::string(node));
  const auto adj = make_adjacency(net, false);
  std::vector<bool> marked(adj.size(), false);
  return cluster_node(adj, *v, marked);
}

std::vector<NodeClustering> clustering_all(const SyllableNetwork& net) {
  require_undirected(net, "clustering_all");
  const auto adj = make_adjacency(net, false);
  std::vector<bool> marked(adj.size(), false);
  std::vector<NodeClustering> out;
  out.reserve(adj.size());
  for (NodeId v = 0; v < adj.size(); ++v) out.push_back(cluster_node(adj, v, marked));
  return out;
}

double clustering_average(const SyllableNetwork& net, ClusteringAverage mode) {
  require_undirected(net, "clustering_average");
  if (net.empty()) throw EmptyNetworkError("clustering_average");
  double sum = 0.0;
  std::size_t counted = 0;
  for (const auto& c : clustering_all(net)) {
    if (mode == ClusteringAverage::kExcludeLowDegree && c.degree < 2) continue;
    sum += c.coefficient;
    ++counted;
  }
  if (counted == 0) {
    throw UndefinedMetricError("no node of degree >= 2 to average clustering over");
  }
  return sum / static_cast<double>(counted);
}

DegreeDistribution degree_distribution(const SyllableNetwork& net) {
  DegreeDistribution dist;
  for (std::size_t d : degrees(net)) ++dist.counts[d];
  return dist;
}

std::vector<std::pair<std::string, std::size_t>> top_k_by_degree(const SyllableNetwork& net,
                                                                 std::size_t k) {
  if (k == 0) throw UsageError("top_k_by_degree: k must be at least 1");
  const auto deg = degrees(net);
  std::vector<NodeId> order(deg.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  const std::size_t take = std::min(k, order.size());
  // NodeId order is label order, so the id tie-break is the label tie-break.
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                    [&](NodeId a, NodeId b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
  std::vector<std::pair<std::string, std::size_t>> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.emplace_back(net.label(order[i]), deg[order[i]]);
  return out;
}

NetworkMetrics analyze(const SyllableNetwork& net, const MetricsOptions& options) {
  if (net.empty()) throw EmptyNetworkError("analyze");
  NetworkMetrics m;
  m.options = options;
  m.n = net.node_count();
  m.k = net.edge_count();
  m.directed = net.variant().directed;
  m.k_over_n = static_cast<double>(m.k) / static_cast<double>(m.n);
  m.avg_degree = options.degree_convention == DegreeConvention::kEdgesPerNode ? m.k_over_n
                                                                               : average_degree(net);

  const bool transform = net.variant().directed || net.variant().weighted;
  m.transformed = transform;
  const SyllableNetwork simple = transform ? to_undirected_unweighted(net) : SyllableNetwork{};
  const SyllableNetwork& view = transform ? simple : net;

  const auto adj = make_adjacency(view, false);
  const auto comps = components_of(adj);
  m.components = comps.size();
  m.giant_fraction = static_cast<double>(comps.front().size()) / static_cast<double>(m.n);

  const auto paths = paths_over_largest_component(adj, options.threads);
  m.avg_path_length = paths.average(options.path_normalization);
  m.diameter = paths.diameter;
  m.avg_clustering = clustering_average(view, options.clustering_average);
  return m;
}

}  // namespace syllnet
