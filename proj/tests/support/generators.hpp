#ifndef SPINE_TESTS_GENERATORS_HPP
#define SPINE_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <spine/graph.hpp>

namespace spine::testing {

using Rng = std::mt19937_64;

inline auto make_graph(std::size_t n, const std::set<Edge> & edges) -> Graph {
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

inline auto add_edge(std::set<Edge> & edges, NodeId u, NodeId v) -> void {
  if (u != v)
    edges.insert({std::min(u, v), std::max(u, v)});
}

/// Erdos-Renyi G(n, p).
inline auto random_graph(std::size_t n, double p, Rng & rng) -> Graph {
  std::bernoulli_distribution coin(p);
  std::set<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.insert({u, v});
  return make_graph(n, edges);
}

/// G(n, p) plus a random spanning tree, so always connected.
inline auto random_connected_graph(std::size_t n, double p, Rng & rng) -> Graph {
  std::bernoulli_distribution coin(p);
  std::set<Edge> edges;
  for (NodeId v = 1; v < n; ++v)
    add_edge(edges, v, std::uniform_int_distribution<NodeId>(0, v - 1)(rng));
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.insert({u, v});
  return make_graph(n, edges);
}

/// Sparse graph with a given mean degree (random edge sampling).
inline auto random_sparse_graph(std::size_t n, double mean_degree, Rng & rng) -> Graph {
  std::set<Edge> edges;
  auto target = static_cast<std::size_t>(mean_degree * static_cast<double>(n) / 2.0);
  std::uniform_int_distribution<NodeId> pick(0, n - 1);
  while (edges.size() < target)
    add_edge(edges, pick(rng), pick(rng));
  return make_graph(n, edges);
}

/// Tree of cliques: each new clique shares a nonempty subset of an existing
/// clique and adds fresh vertices. The result is connected and chordal.
inline auto random_chordal_graph(std::size_t n, Rng & rng, std::size_t max_clique = 5) -> Graph {
  std::set<Edge> edges;
  std::vector<std::vector<NodeId>> cliques;
  std::uniform_int_distribution<std::size_t> clique_size(1, max_clique);
  std::size_t next = 0;
  auto first = std::min(n, clique_size(rng));
  std::vector<NodeId> c0;
  for (; next < first; ++next)
    c0.push_back(next);
  for (auto a : c0)
    for (auto b : c0)
      add_edge(edges, a, b);
  cliques.push_back(c0);
  while (next < n) {
    const auto & base = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
    auto shared = base;
    std::shuffle(shared.begin(), shared.end(), rng);
    shared.resize(std::uniform_int_distribution<std::size_t>(1, shared.size())(rng));
    auto fresh = std::min(n - next, clique_size(rng));
    auto clique = shared;
    for (std::size_t i = 0; i < fresh; ++i)
      clique.push_back(next++);
    for (auto a : clique)
      for (auto b : clique)
        add_edge(edges, a, b);
    cliques.push_back(clique);
  }
  return make_graph(n, edges);
}

inline auto cycle_graph(std::size_t k) -> Graph {
  std::set<Edge> edges;
  for (NodeId i = 0; i < k; ++i)
    add_edge(edges, i, (i + 1) % k);
  return make_graph(k, edges);
}

inline auto path_graph(std::size_t k) -> Graph {
  std::set<Edge> edges;
  for (NodeId i = 0; i + 1 < k; ++i)
    add_edge(edges, i, i + 1);
  return make_graph(k, edges);
}

inline auto complete_graph(std::size_t k) -> Graph {
  std::set<Edge> edges;
  for (NodeId i = 0; i < k; ++i)
    for (NodeId j = i + 1; j < k; ++j)
      edges.insert({i, j});
  return make_graph(k, edges);
}

/// Star K(1,k), hub 0.
inline auto star_graph(std::size_t k) -> Graph {
  std::set<Edge> edges;
  for (NodeId i = 1; i <= k; ++i)
    add_edge(edges, 0, i);
  return make_graph(k + 1, edges);
}

inline auto petersen_graph() -> Graph {
  std::set<Edge> edges;
  for (NodeId i = 0; i < 5; ++i) {
    add_edge(edges, i, (i + 1) % 5);
    add_edge(edges, i, i + 5);
    add_edge(edges, i + 5, (i + 2) % 5 + 5);
  }
  return make_graph(10, edges);
}

/// k-cycle on nodes 0..k-1 with `pendants` small random trees (1 to
/// max_tree nodes) hung off random cycle nodes.
inline auto cycle_with_pendant_trees(std::size_t k, std::size_t pendants, Rng & rng, std::size_t max_tree = 3)
    -> Graph {
  std::set<Edge> edges;
  for (NodeId i = 0; i < k; ++i)
    add_edge(edges, i, (i + 1) % k);
  NodeId next = k;
  std::uniform_int_distribution<NodeId> on_cycle(0, k - 1);
  std::uniform_int_distribution<std::size_t> tree_size(1, max_tree);
  for (std::size_t t = 0; t < pendants; ++t) {
    std::vector<NodeId> tree{on_cycle(rng)};
    auto size = tree_size(rng);
    for (std::size_t i = 0; i < size; ++i) {
      auto parent = tree[std::uniform_int_distribution<std::size_t>(0, tree.size() - 1)(rng)];
      add_edge(edges, parent, next);
      tree.push_back(next++);
    }
  }
  return make_graph(next, edges);
}

/// A 6-cycle with a path of n - 6 nodes hanging off it. Path ids increase
/// towards the free end, so an ascending sweep strips only the current leaf
/// and reduction needs n - 6 sweeps, the last one empty.
inline auto worst_case_chain(std::size_t n) -> Graph {
  const std::size_t m = n - 6;
  std::set<Edge> edges;
  // Path node at distance i from the free end has id m - 1 - i.
  for (std::size_t i = 0; i + 1 < m; ++i)
    add_edge(edges, m - 1 - i, m - 2 - i);
  for (NodeId c = 0; c < 6; ++c)
    add_edge(edges, m + c, m + (c + 1) % 6);
  add_edge(edges, 0, m);
  return make_graph(n, edges);
}

inline auto random_permutation(const Graph & g, Rng & rng) -> std::vector<NodeId> {
  auto order = g.nodes().to_vector();
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

inline auto random_subset(std::size_t n, Rng & rng, double p = 0.3) -> NodeSet {
  std::bernoulli_distribution coin(p);
  NodeSet s(n);
  for (NodeId v = 0; v < n; ++v)
    if (coin(rng))
      s.insert(v);
  return s;
}

} // namespace spine::testing

#endif
