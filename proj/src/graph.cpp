#include "linkscale/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "linkscale/errors.hpp"

namespace linkscale {

Graph::Graph(std::size_t node_count, std::vector<NodePair> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw InvalidArgumentError("self-loop on node " + std::to_string(e.u));
    }
    e = make_pair(e.u, e.v);
    if (e.v >= node_count_) {
      throw InvalidArgumentError("edge endpoint " + std::to_string(e.v) +
                                 " out of range for " + std::to_string(node_count_) + " nodes");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(node_count_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < node_count_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in this order leaves every
  // neighbor list sorted: lower neighbors arrive first via the .v pass.
  for (const auto& e : edges_) adjacency_[cursor[e.v]++] = e.u;
  for (const auto& e : edges_) adjacency_[cursor[e.u]++] = e.v;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (std::size_t u = 0; u < node_count_; ++u) d = std::max(d, degree(static_cast<NodeId>(u)));
  return d;
}

bool Graph::has_edge(NodeId a, NodeId b) const noexcept {
  if (a == b || a >= node_count_ || b >= node_count_) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

GraphSequence::GraphSequence(std::size_t node_count, std::vector<Graph> snapshots)
    : node_count_(node_count), snapshots_(std::move(snapshots)) {
  if (node_count_ == 0) throw InvalidArgumentError("sequence needs at least one node");
  if (snapshots_.empty()) throw InvalidArgumentError("sequence needs at least one snapshot");
  for (std::size_t i = 0; i < snapshots_.size(); ++i) {
    if (snapshots_[i].node_count() != node_count_) {
      throw ShapeError("snapshot " + std::to_string(i) + " has " +
                       std::to_string(snapshots_[i].node_count()) + " nodes, expected " +
                       std::to_string(node_count_));
    }
  }
}

namespace {

void check_window(const GraphSequence& seq, WindowSize w) {
  if (w.value < 1 || w.value > seq.size()) {
    throw InvalidWindowError("window " + std::to_string(w.value) + " outside [1, " +
                             std::to_string(seq.size()) + "]");
  }
}

}  // namespace

Graph aggregate_window(const GraphSequence& seq, WindowSize w, std::size_t j) {
  check_window(seq, w);
  if (j >= seq.size() / w.value) {
    throw InvalidWindowError("window index " + std::to_string(j) + " past end");
  }
  std::vector<NodePair> merged;
  std::size_t total = 0;
  for (std::size_t i = j * w.value; i < (j + 1) * w.value; ++i) total += seq[i].edge_count();
  merged.reserve(total);
  for (std::size_t i = j * w.value; i < (j + 1) * w.value; ++i) {
    auto e = seq[i].edges();
    merged.insert(merged.end(), e.begin(), e.end());
  }
  return Graph(seq.node_count(), std::move(merged));
}

GraphSequence aggregate(const GraphSequence& seq, WindowSize w) {
  check_window(seq, w);
  const std::size_t count = seq.size() / w.value;
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(aggregate_window(seq, w, j));
  return GraphSequence(seq.node_count(), std::move(out));
}

PairSet new_links(const Graph& prev, const Graph& next) {
  if (prev.node_count() != next.node_count()) {
    throw ShapeError("new_links: node counts " + std::to_string(prev.node_count()) + " and " +
                     std::to_string(next.node_count()) + " differ");
  }
  PairSet out;
  std::set_difference(next.edges().begin(), next.edges().end(), prev.edges().begin(),
                      prev.edges().end(), std::back_inserter(out));
  return out;
}

PairSet non_edges(const Graph& g) {
  PairSet out;
  out.reserve(g.non_edge_count());
  const auto n = static_cast<NodeId>(g.node_count());
  for (NodeId u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (NodeId v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace linkscale
