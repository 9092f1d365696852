#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace linkscale {

using NodeId = std::uint32_t;

/// Unordered node pair, stored normalized so that `u < v`.
struct NodePair {
  NodeId u{0};
  NodeId v{0};

  auto operator<=>(const NodePair&) const = default;
};

/// Normalizes {a, b} into a NodePair. Does not reject a == b; Graph does.
constexpr NodePair make_pair(NodeId a, NodeId b) noexcept {
  return a < b ? NodePair{a, b} : NodePair{b, a};
}

using PairSet = std::vector<NodePair>;  // sorted, unique

/// Simple undirected graph on nodes 0..n-1. Immutable once built; the edge
/// list is kept sorted and a CSR adjacency is built alongside it.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Duplicates collapse;
  /// self-loops and out-of-range endpoints throw InvalidArgumentError.
  Graph(std::size_t node_count, std::vector<NodePair> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const NodePair> edges() const noexcept { return edges_; }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }
  std::size_t max_degree() const noexcept;

  bool has_edge(NodeId a, NodeId b) const noexcept;

  /// n(n-1)/2 - |E|.
  std::size_t non_edge_count() const noexcept {
    return node_count_ * (node_count_ - (node_count_ > 0 ? 1 : 0)) / 2 - edges_.size();
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t node_count_{0};
  std::vector<NodePair> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

/// Ordered snapshots over a fixed node set. Always holds at least one graph.
class GraphSequence {
 public:
  GraphSequence() = default;
  GraphSequence(std::size_t node_count, std::vector<Graph> snapshots);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t size() const noexcept { return snapshots_.size(); }
  const Graph& operator[](std::size_t i) const noexcept { return snapshots_[i]; }
  const Graph& at(std::size_t i) const { return snapshots_.at(i); }
  std::span<const Graph> snapshots() const noexcept { return snapshots_; }

  auto begin() const noexcept { return snapshots_.begin(); }
  auto end() const noexcept { return snapshots_.end(); }

  friend bool operator==(const GraphSequence&, const GraphSequence&) = default;

 private:
  std::size_t node_count_{0};
  std::vector<Graph> snapshots_;
};

struct WindowSize {
  std::size_t value{1};

  constexpr explicit WindowSize(std::size_t w) : value(w) {}
  auto operator<=>(const WindowSize&) const = default;
};

/// Union of snapshots [j*w, (j+1)*w). Throws InvalidWindowError when w is
/// out of range or the window runs past the end of the sequence.
Graph aggregate_window(const GraphSequence& seq, WindowSize w, std::size_t j);

/// floor(L/w) snapshots, each the union of w consecutive inputs. Trailing
/// snapshots that do not fill a whole window are dropped.
GraphSequence aggregate(const GraphSequence& seq, WindowSize w);

/// E(next) \ E(prev), sorted.
PairSet new_links(const Graph& prev, const Graph& next);

/// All unordered pairs that are not edges, in lexicographic order.
PairSet non_edges(const Graph& g);

}  // namespace linkscale
