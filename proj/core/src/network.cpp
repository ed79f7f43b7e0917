#include "syllnet/network.hpp"

#include <algorithm>
#include <numeric>

#include "syllnet/error.hpp"

namespace syllnet {

std::array<NetworkVariant, 8> NetworkVariant::all() {
  std::array<NetworkVariant, 8> out{};
  std::size_t i = 0;
  for (Linking linking : {Linking::kCoOccurrence, Linking::kFirstNeighbour}) {
    for (bool directed : {false, true}) {
      for (bool weighted : {false, true}) out[i++] = NetworkVariant{linking, directed, weighted};
    }
  }
  return out;
}

std::string NetworkVariant::name() const {
  return std::string(linking == Linking::kCoOccurrence ? "co" : "fn") +
         (directed ? "/directed" : "/undirected") + (weighted ? "/weighted" : "/unweighted");
}

std::string_view to_string(Linking linking) {
  return linking == Linking::kCoOccurrence ? "co_occurrence" : "first_neighbour";
}

std::optional<Linking> parse_linking(std::string_view text) {
  if (text == "co" || text == "co_occurrence") return Linking::kCoOccurrence;
  if (text == "fn" || text == "first_neighbour") return Linking::kFirstNeighbour;
  return std::nullopt;
}

SyllableNetwork SyllableNetwork::from_ids(NetworkVariant variant,
                                          std::vector<std::string> sorted_nodes,
                                          std::vector<Edge> edges,
                                          std::vector<std::string> provenance,
                                          bool merge_duplicates) {
  for (std::size_t i = 1; i < sorted_nodes.size(); ++i) {
    if (!(sorted_nodes[i - 1] < sorted_nodes[i])) {
      throw UsageError("invalid network: node labels must be sorted and unique ('" +
                       sorted_nodes[i] + "')");
    }
  }
  const auto n = sorted_nodes.size();
  for (auto& e : edges) {
    if (e.source >= n || e.target >= n) throw UsageError("invalid network: edge endpoint out of range");
    if (e.source == e.target) {
      throw UsageError("invalid network: self-loop on '" + sorted_nodes[e.source] + "'");
    }
    if (e.weight == 0) throw UsageError("invalid network: edge weights must be positive");
    if (!variant.weighted && e.weight != 1 && !merge_duplicates) {
      throw UsageError("invalid network: unweighted network with edge weight " +
                       std::to_string(e.weight));
    }
    if (!variant.directed && e.source > e.target) std::swap(e.source, e.target);
    if (!variant.weighted) e.weight = 1;
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });

  std::vector<Edge> unique;
  unique.reserve(edges.size());
  for (const auto& e : edges) {
    if (!unique.empty() && unique.back().source == e.source && unique.back().target == e.target) {
      if (!merge_duplicates) {
        throw UsageError("invalid network: duplicate edge '" + sorted_nodes[e.source] + "' - '" +
                         sorted_nodes[e.target] + "'");
      }
      if (variant.weighted) unique.back().weight += e.weight;
      continue;
    }
    unique.push_back(e);
  }

  SyllableNetwork net(variant);
  net.nodes_ = std::move(sorted_nodes);
  net.edges_ = std::move(unique);
  net.provenance_ = std::move(provenance);
  return net;
}

SyllableNetwork SyllableNetwork::from_labeled(NetworkVariant variant,
                                              std::vector<std::string> nodes,
                                              std::span<const LabeledEdge> edges,
                                              std::vector<std::string> provenance,
                                              bool merge_duplicates) {
  for (const auto& e : edges) {
    nodes.push_back(e.source);
    nodes.push_back(e.target);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto id_of = [&](const std::string& label) {
    return static_cast<NodeId>(std::lower_bound(nodes.begin(), nodes.end(), label) - nodes.begin());
  };
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& e : edges) ids.push_back(Edge{id_of(e.source), id_of(e.target), e.weight});
  return from_ids(variant, std::move(nodes), std::move(ids), std::move(provenance),
                  merge_duplicates);
}

std::optional<NodeId> SyllableNetwork::find(std::string_view label) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), label,
                                   [](const std::string& a, std::string_view b) { return a < b; });
  if (it == nodes_.end() || *it != label) return std::nullopt;
  return static_cast<NodeId>(it - nodes_.begin());
}

std::optional<std::uint64_t> SyllableNetwork::weight(std::string_view source,
                                                     std::string_view target) const {
  auto s = find(source);
  auto t = find(target);
  if (!s || !t) return std::nullopt;
  if (!variant_.directed && *s > *t) std::swap(s, t);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{*s, *t},
                                   [](const Edge& e, const std::pair<NodeId, NodeId>& k) {
                                     return e.source != k.first ? e.source < k.first
                                                                : e.target < k.second;
                                   });
  if (it == edges_.end() || it->source != *s || it->target != *t) return std::nullopt;
  return it->weight;
}

NodeId EdgeAccumulator::intern(std::string_view label) {
  const auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<NodeId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void EdgeAccumulator::add_node(std::string_view label) { intern(label); }

void EdgeAccumulator::add_pair(std::string_view source, std::string_view target,
                               std::uint64_t count) {
  NodeId a = intern(source);
  NodeId b = intern(target);
  if (a == b) return;
  if (!variant_.directed && a > b) std::swap(a, b);
  counts_[key(a, b)] += count;
}

void EdgeAccumulator::add_word(const SyllabifiedWord& word) {
  const auto& syl = word.syllables;
  for (const auto& s : syl) intern(s);

  if (variant_.linking == Linking::kFirstNeighbour) {
    for (std::size_t i = 0; i + 1 < syl.size(); ++i) add_pair(syl[i], syl[i + 1]);
    return;
  }
  // Clique over distinct syllables, oriented by first position in the word.
  std::vector<std::string_view> distinct;
  for (const auto& s : syl) {
    if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) add_pair(distinct[i], distinct[j]);
  }
}

void EdgeAccumulator::merge(const EdgeAccumulator& other) {
  if (!(other.variant_ == variant_)) {
    throw VariantMismatchError(variant_.name() + " vs " + other.variant_.name());
  }
  for (const auto& label : other.labels_) intern(label);
  for (const auto& [k, count] : other.counts_) {
    add_pair(other.labels_[k >> 32], other.labels_[k & 0xFFFFFFFFu], count);
  }
}

SyllableNetwork EdgeAccumulator::finish(std::vector<std::string> provenance) const {
  std::vector<NodeId> order(labels_.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return labels_[a] < labels_[b]; });
  std::vector<NodeId> remap(labels_.size());
  std::vector<std::string> sorted;
  sorted.reserve(labels_.size());
  for (NodeId rank = 0; rank < order.size(); ++rank) {
    remap[order[rank]] = rank;
    sorted.push_back(labels_[order[rank]]);
  }

  std::vector<Edge> edges;
  edges.reserve(counts_.size());
  for (const auto& [k, count] : counts_) {
    edges.push_back(Edge{remap[k >> 32], remap[k & 0xFFFFFFFFu], variant_.weighted ? count : 1});
  }
  return SyllableNetwork::from_ids(variant_, std::move(sorted), std::move(edges),
                                   std::move(provenance));
}

SyllableNetwork build_network(std::span<const SyllabifiedWord> words, NetworkVariant variant,
                              std::vector<std::string> provenance) {
  EdgeAccumulator acc(variant);
  for (const auto& w : words) acc.add_word(w);
  return acc.finish(std::move(provenance));
}

SyllableNetwork merge(std::span<const SyllableNetwork> networks) {
  if (networks.empty()) return SyllableNetwork{};
  const NetworkVariant variant = networks.front().variant();
  EdgeAccumulator acc(variant);
  std::vector<std::string> provenance;
  for (const auto& net : networks) {
    if (!(net.variant() == variant)) {
      throw VariantMismatchError(variant.name() + " vs " + net.variant().name());
    }
    for (const auto& label : net.nodes()) acc.add_node(label);
    for (const auto& e : net.edges()) acc.add_pair(net.label(e.source), net.label(e.target), e.weight);
    provenance.insert(provenance.end(), net.provenance().begin(), net.provenance().end());
  }
  return acc.finish(std::move(provenance));
}

SyllableNetwork to_undirected_unweighted(const SyllableNetwork& net) {
  const NetworkVariant variant{net.variant().linking, false, false};
  std::vector<Edge> edges(net.edges().begin(), net.edges().end());
  return SyllableNetwork::from_ids(variant, {net.nodes().begin(), net.nodes().end()},
                                   std::move(edges), net.provenance(), true);
}

std::vector<std::size_t> degrees(const SyllableNetwork& net) {
  std::vector<std::size_t> deg(net.node_count(), 0);
  for (const auto& e : net.edges()) {
    ++deg[e.source];
    ++deg[e.target];
  }
  return deg;
}

SyllableNetwork filter_min_degree(const SyllableNetwork& net, std::size_t k_min, bool iterative) {
  if (k_min == 0) throw UsageError("filter_min_degree: k_min must be at least 1");
  std::vector<bool> keep(net.node_count(), true);
  std::vector<std::size_t> deg = degrees(net);
  for (;;) {
    bool removed = false;
    for (std::size_t v = 0; v < keep.size(); ++v) {
      if (keep[v] && deg[v] < k_min) {
        keep[v] = false;
        removed = true;
      }
    }
    if (!iterative || !removed) break;
    std::fill(deg.begin(), deg.end(), 0);
    for (const auto& e : net.edges()) {
      if (keep[e.source] && keep[e.target]) {
        ++deg[e.source];
        ++deg[e.target];
      }
    }
  }

  std::vector<NodeId> remap(net.node_count(), 0);
  std::vector<std::string> nodes;
  for (std::size_t v = 0; v < keep.size(); ++v) {
    if (!keep[v]) continue;
    remap[v] = static_cast<NodeId>(nodes.size());
    nodes.push_back(net.nodes()[v]);
  }
  std::vector<Edge> edges;
  for (const auto& e : net.edges()) {
    if (keep[e.source] && keep[e.target]) {
      edges.push_back(Edge{remap[e.source], remap[e.target], e.weight});
    }
  }
  return SyllableNetwork::from_ids(net.variant(), std::move(nodes), std::move(edges),
                                   net.provenance());
}

}  // namespace syllnet
