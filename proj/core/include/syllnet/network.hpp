#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "syllnet/syllabifier.hpp"

namespace syllnet {

enum class Linking {
  kCoOccurrence,    // every pair of distinct syllables of a word
  kFirstNeighbour,  // syllables at positions i and i+1
};

/// Linking rule x directedness x weightedness: eight construction strategies.
struct NetworkVariant {
  Linking linking = Linking::kCoOccurrence;
  bool directed = false;
  bool weighted = false;

  static std::array<NetworkVariant, 8> all();
  std::string name() const;  // e.g. "co/undirected/unweighted"

  friend bool operator==(const NetworkVariant&, const NetworkVariant&) = default;
};

std::string_view to_string(Linking linking);
/// Accepts "co", "co_occurrence", "fn", "first_neighbour".
std::optional<Linking> parse_linking(std::string_view text);

using NodeId = std::uint32_t;

struct Edge {
  NodeId source;
  NodeId target;
  std::uint64_t weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct LabeledEdge {
  std::string source;
  std::string target;
  std::uint64_t weight = 1;
};

/// Immutable simple graph over syllable labels.
///
/// Canonical form: nodes sorted bytewise and unique, NodeId is the index into
/// that order; edges sorted by (source, target); undirected edges stored once
/// with source < target; no self-loops; unweighted networks carry weight 1.
class SyllableNetwork {
 public:
  SyllableNetwork() = default;
  explicit SyllableNetwork(NetworkVariant variant) : variant_(variant) {}

  /// Validates and canonicalizes. Duplicate edges are an error unless
  /// `merge_duplicates` is set, in which case weights add (weighted) or
  /// collapse (unweighted). Self-loops and zero weights are rejected.
  static SyllableNetwork from_labeled(NetworkVariant variant, std::vector<std::string> nodes,
                                      std::span<const LabeledEdge> edges,
                                      std::vector<std::string> provenance = {},
                                      bool merge_duplicates = false);

  /// Same contract over pre-sorted unique labels and id-based edges.
  static SyllableNetwork from_ids(NetworkVariant variant, std::vector<std::string> sorted_nodes,
                                  std::vector<Edge> edges, std::vector<std::string> provenance = {},
                                  bool merge_duplicates = false);

  const NetworkVariant& variant() const noexcept { return variant_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  std::span<const std::string> nodes() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const std::vector<std::string>& provenance() const noexcept { return provenance_; }

  const std::string& label(NodeId id) const { return nodes_.at(id); }
  std::optional<NodeId> find(std::string_view label) const;
  std::optional<std::uint64_t> weight(std::string_view source, std::string_view target) const;

  friend bool operator==(const SyllableNetwork&, const SyllableNetwork&) = default;

 private:
  NetworkVariant variant_;
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::string> provenance_;
};

/// Pair-to-count accumulator used while building; shards merge associatively.
class EdgeAccumulator {
 public:
  explicit EdgeAccumulator(NetworkVariant variant) : variant_(variant) {}

  void add_word(const SyllabifiedWord& word);
  void add_node(std::string_view label);
  /// Ignores self-pairs. Orientation is kept only for directed variants.
  void add_pair(std::string_view source, std::string_view target, std::uint64_t count = 1);
  void merge(const EdgeAccumulator& other);

  const NetworkVariant& variant() const noexcept { return variant_; }
  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t pair_count() const noexcept { return counts_.size(); }

  SyllableNetwork finish(std::vector<std::string> provenance = {}) const;

 private:
  NodeId intern(std::string_view label);
  static std::uint64_t key(NodeId a, NodeId b) { return (std::uint64_t{a} << 32) | b; }

  NetworkVariant variant_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
  std::unordered_map<std::uint64_t, std::uint64_t> counts_;
};

SyllableNetwork build_network(std::span<const SyllabifiedWord> words, NetworkVariant variant,
                              std::vector<std::string> provenance = {});

/// Node union, edge union; weighted variants sum weights. Throws
/// VariantMismatchError when variants differ.
SyllableNetwork merge(std::span<const SyllableNetwork> networks);

/// Collapses orientation and weights; keeps the linking rule.
SyllableNetwork to_undirected_unweighted(const SyllableNetwork& net);

/// Degree per node: number of incident edges (in + out for directed).
std::vector<std::size_t> degrees(const SyllableNetwork& net);

/// Removes nodes of degree < k_min (and their edges) once, or repeatedly
/// until every remaining node qualifies (the k-core) when `iterative`.
SyllableNetwork filter_min_degree(const SyllableNetwork& net, std::size_t k_min, bool iterative);

}  // namespace syllnet
