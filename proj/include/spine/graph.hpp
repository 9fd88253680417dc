#ifndef SPINE_GRAPH_HPP
#define SPINE_GRAPH_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "node_set.hpp"

namespace spine {

using Edge = std::pair<NodeId, NodeId>;
using Distance = std::size_t;

inline constexpr Distance unreachable = std::numeric_limits<Distance>::max();

/// Simple undirected graph over a fixed universe of node ids.
///
/// A graph may be a masked view of a larger one: only the ids in nodes() are
/// present, the rest of the universe is absent and has no edges. This keeps
/// ids stable between an input network and every subgraph derived from it.
class Graph {
public:
  Graph() = default;

  /// Rejects self-loops, parallel edges and out-of-range endpoints.
  /// Labels default to the decimal node index.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {})
      : nodes_(NodeSet::full(n)), adjacency_(n, NodeSet(n)), labels_(std::move(labels)) {
    if (labels_.empty()) {
      labels_.reserve(n);
      for (std::size_t i = 0; i < n; ++i)
        labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n)
      throw std::invalid_argument("label table size does not match node count");
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::out_of_range("edge endpoint outside node range");
      if (u == v)
        throw std::invalid_argument("self-loop on node " + labels_[u]);
      if (adjacency_[u].contains(v))
        throw std::invalid_argument("parallel edge " + labels_[u] + " -- " + labels_[v]);
      adjacency_[u].insert(v);
      adjacency_[v].insert(u);
      ++edge_count_;
    }
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges, std::vector<std::string> labels = {})
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels)) {}

  auto universe_size() const -> std::size_t { return adjacency_.size(); }
  auto nodes() const -> const NodeSet & { return nodes_; }
  auto node_count() const -> std::size_t { return nodes_.count(); }
  auto edge_count() const -> std::size_t { return edge_count_; }

  auto has_node(NodeId v) const -> bool { return v < universe_size() && nodes_.contains(v); }

  auto adjacent(NodeId v) const -> const NodeSet & {
    require_node(v);
    return adjacency_[v];
  }

  auto has_edge(NodeId u, NodeId v) const -> bool { return adjacent(u).contains(v); }
  auto degree(NodeId v) const -> std::size_t { return adjacent(v).count(); }

  auto labels() const -> const std::vector<std::string> & { return labels_; }
  auto label(NodeId v) const -> const std::string & { return labels_.at(v); }

  /// Edges (u, v) with u < v in ascending order.
  auto edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    nodes_.for_each([&](NodeId u) {
      for (NodeId v = adjacency_[u].next(u + 1); v < universe_size(); v = adjacency_[u].next(v + 1))
        out.emplace_back(u, v);
    });
    return out;
  }

  auto require_node(NodeId v) const -> void {
    if (!has_node(v))
      throw std::out_of_range("node " + std::to_string(v) + " is not present in the graph");
  }

  auto require_subset(const NodeSet & y) const -> void {
    if (y.universe_size() != universe_size())
      throw std::out_of_range("node set universe does not match graph");
    if (!y.is_subset_of(nodes_))
      throw std::out_of_range("node set contains nodes not present in the graph");
  }

  friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
  friend auto induced_subgraph(const Graph & g, const NodeSet & keep) -> Graph;

  NodeSet nodes_;
  std::vector<NodeSet> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Y.eta: nodes outside y adjacent to some member of y.
inline auto neighborhood(const Graph & g, const NodeSet & y) -> NodeSet {
  g.require_subset(y);
  NodeSet out(g.universe_size());
  y.for_each([&](NodeId u) { out |= g.adjacent(u); });
  return out -= y;
}

/// Y.rho = Y.eta + Y.
inline auto region(const Graph & g, const NodeSet & y) -> NodeSet {
  return neighborhood(g, y) |= y;
}

/// Neighborhood closure: y plus every neighbor whose own neighborhood lies
/// inside the region of y.
inline auto closure(const Graph & g, const NodeSet & y) -> NodeSet {
  auto nbhd = neighborhood(g, y);
  auto reg = nbhd | y;
  auto out = y;
  nbhd.for_each([&](NodeId z) {
    if (g.adjacent(z).is_subset_of(reg))
      out.insert(z);
  });
  return out;
}

inline auto singleton(const Graph & g, NodeId v) -> NodeSet {
  NodeSet s(g.universe_size());
  s.insert(v);
  return s;
}

/// Hop distances from s; `unreachable` for nodes in other components and
/// for ids absent from the graph.
inline auto bfs_distances(const Graph & g, NodeId s) -> std::vector<Distance> {
  g.require_node(s);
  std::vector<Distance> dist(g.universe_size(), unreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[s] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto u = queue[head];
    g.adjacent(u).for_each([&](NodeId v) {
      if (dist[v] == unreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

/// Same universe and labels; only nodes in keep remain, with the edges of g
/// between them.
inline auto induced_subgraph(const Graph & g, const NodeSet & keep) -> Graph {
  g.require_subset(keep);
  Graph out;
  out.nodes_ = keep;
  out.labels_ = g.labels_;
  out.adjacency_.assign(g.universe_size(), NodeSet(g.universe_size()));
  std::size_t twice = 0;
  keep.for_each([&](NodeId v) {
    out.adjacency_[v] = g.adjacency_[v] & keep;
    twice += out.adjacency_[v].count();
  });
  out.edge_count_ = twice / 2;
  return out;
}

/// Components in order of their smallest node id.
inline auto connected_components(const Graph & g) -> std::vector<NodeSet> {
  std::vector<NodeSet> out;
  NodeSet seen(g.universe_size());
  g.nodes().for_each([&](NodeId s) {
    if (seen.contains(s))
      return;
    NodeSet comp(g.universe_size());
    std::vector<NodeId> stack{s};
    comp.insert(s);
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      (g.adjacent(u) - comp).for_each([&](NodeId v) {
        comp.insert(v);
        stack.push_back(v);
      });
    }
    seen |= comp;
    out.push_back(std::move(comp));
  });
  return out;
}

} // namespace spine

#endif
