#ifndef SPINE_CENTRALITY_HPP
#define SPINE_CENTRALITY_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"
#include "reduction.hpp"

namespace spine {

/// delta(y): sum of hop distances from y to every node of its component.
inline auto distance_sums(const Graph & g) -> std::vector<std::size_t> {
  std::vector<std::size_t> out(g.universe_size(), 0);
  g.nodes().for_each([&](NodeId y) {
    auto d = bfs_distances(g, y);
    std::size_t sum = 0;
    for (auto x : d)
      if (x != unreachable)
        sum += x;
    out[y] = sum;
  });
  return out;
}

namespace detail {

struct ShortestPathDag {
  std::vector<NodeId> order;
  std::vector<Distance> dist;
  std::vector<BigInt> sigma;
  std::vector<std::vector<NodeId>> preds;

  ShortestPathDag(const Graph & g, NodeId s)
      : dist(g.universe_size(), unreachable), sigma(g.universe_size(), 0), preds(g.universe_size()) {
    dist[s] = 0;
    sigma[s] = 1;
    order.push_back(s);
    for (std::size_t h = 0; h < order.size(); ++h) {
      auto v = order[h];
      g.adjacent(v).for_each([&](NodeId w) {
        if (dist[w] == unreachable) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      });
    }
  }
};

template <typename T, typename PerSource>
auto accumulate_over_sources(const Graph & g, unsigned threads, PerSource per_source) -> std::vector<T> {
  auto sources = g.nodes().to_vector();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(sources.size(), 1))));
  std::vector<std::vector<T>> partial(threads, std::vector<T>(g.universe_size(), T(0)));
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned t) {
    for (auto i = next++; i < sources.size(); i = next++)
      per_source(sources[i], partial[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work, t);
    for (auto & th : pool)
      th.join();
  }
  // Exact arithmetic, so merge order does not affect the result.
  for (unsigned t = 1; t < threads; ++t)
    for (std::size_t v = 0; v < g.universe_size(); ++v)
      partial[0][v] += partial[t][v];
  return std::move(partial[0]);
}

} // namespace detail

/// Exact pair-dependency betweenness over unordered pairs {s, t}, s != y != t:
/// the sum of the fraction of shortest s-t paths passing through y.
inline auto betweenness(const Graph & g, unsigned threads = 1) -> std::vector<Rational> {
  auto out = detail::accumulate_over_sources<Rational>(g, threads, [&](NodeId s, std::vector<Rational> & acc) {
    detail::ShortestPathDag dag(g, s);
    std::vector<Rational> delta(g.universe_size(), Rational(0));
    for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
      auto w = *it;
      for (auto v : dag.preds[w])
        delta[v] += Rational(dag.sigma[v], dag.sigma[w]) * (1 + delta[w]);
      if (w != s)
        acc[w] += delta[w];
    }
  });
  for (auto & b : out)
    b /= 2;
  return out;
}

/// Raw number of shortest paths containing y, summed over unordered pairs.
/// By default y must be interior to the path; with `include_endpoints` the
/// paths that start or end at y are counted as well.
inline auto raw_betweenness(const Graph & g, bool include_endpoints = false, unsigned threads = 1)
    -> std::vector<BigInt> {
  std::vector<BigInt> endpoint_paths(g.universe_size(), 0);
  auto out = detail::accumulate_over_sources<BigInt>(g, threads, [&](NodeId s, std::vector<BigInt> & acc) {
    detail::ShortestPathDag dag(g, s);
    // below[y]: shortest-path DAG paths leaving y downwards, any length >= 1.
    std::vector<BigInt> below(g.universe_size(), 0);
    for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
      auto w = *it;
      for (auto v : dag.preds[w])
        below[v] += 1 + below[w];
      if (w != s)
        acc[w] += dag.sigma[w] * below[w];
    }
    // Each source writes only its own slot.
    BigInt own = 0;
    for (auto t : dag.order)
      if (t != s)
        own += dag.sigma[t];
    endpoint_paths[s] = own;
  });
  for (auto & b : out)
    b /= 2;
  if (include_endpoints)
    for (std::size_t v = 0; v < out.size(); ++v)
      out[v] += endpoint_paths[v];
  return out;
}

struct CentralityReport {
  std::vector<std::size_t> distance_sum;
  std::vector<Rational> betweenness;
  std::vector<BigInt> raw_betweenness;
  /// argmin distance_sum, taken per connected component.
  NodeSet cc_center;
  /// argmax of the fractional betweenness, per component.
  NodeSet cb_center;
  /// argmax of the raw path count, per component.
  NodeSet raw_cb_center;
};

namespace detail {

template <typename T, typename Better>
auto best_per_component(const Graph & g, const std::vector<NodeSet> & comps, const std::vector<T> & score,
                        Better better) -> NodeSet {
  NodeSet out(g.universe_size());
  for (const auto & comp : comps) {
    const T * best = nullptr;
    comp.for_each([&](NodeId v) {
      if (best == nullptr || better(score[v], *best))
        best = &score[v];
    });
    comp.for_each([&](NodeId v) {
      if (score[v] == *best)
        out.insert(v);
    });
  }
  return out;
}

} // namespace detail

inline auto centrality(const Graph & g, unsigned threads = 1) -> CentralityReport {
  CentralityReport r;
  r.distance_sum = distance_sums(g);
  r.betweenness = betweenness(g, threads);
  r.raw_betweenness = raw_betweenness(g, false, threads);
  auto comps = connected_components(g);
  r.cc_center = detail::best_per_component(g, comps, r.distance_sum, std::less<>{});
  r.cb_center = detail::best_per_component(g, comps, r.betweenness, std::greater<>{});
  r.raw_cb_center = detail::best_per_component(g, comps, r.raw_betweenness, std::greater<>{});
  return r;
}

/// Spine nodes y meeting both balance hypotheses within y's spine component:
///   sum of tau over the other component nodes >= tau(y), and
///   sum of tau over y's spine neighbours      >= tau(y).
/// A single-node component fails the second (empty sum).
inline auto balance_conditions(const ReductionResult & r) -> NodeSet {
  const auto & spine = r.spine;
  NodeSet out(spine.universe_size());
  for (const auto & comp : connected_components(spine)) {
    std::size_t total = 0;
    comp.for_each([&](NodeId x) { total += r.tau[x]; });
    comp.for_each([&](NodeId y) {
      std::size_t around = 0;
      spine.adjacent(y).for_each([&](NodeId x) { around += r.tau[x]; });
      if (total - r.tau[y] >= r.tau[y] && around >= r.tau[y])
        out.insert(y);
    });
  }
  return out;
}

enum class ContainmentVerdict { hypotheses_unmet, holds, violated };

inline auto to_string(ContainmentVerdict v) -> const char * {
  switch (v) {
  case ContainmentVerdict::hypotheses_unmet:
    return "hypotheses_unmet";
  case ContainmentVerdict::holds:
    return "holds";
  case ContainmentVerdict::violated:
    return "violated";
  }
  return "unknown";
}

struct ContainmentReport {
  ContainmentVerdict verdict = ContainmentVerdict::hypotheses_unmet;
  bool balanced = false;
  /// Centers that are spine nodes.
  NodeSet cc_on_spine;
  NodeSet cb_on_spine;
  /// Every component's center meets the spine.
  bool cc_intersects = false;
  bool cb_intersects = false;
  /// Each center lies in the closed neighbourhoods of its spine members.
  bool cc_within_neighborhood = false;
  bool cb_within_neighborhood = false;
};

/// Checks that the distance and betweenness centers of g meet the spine,
/// and whether they stay next to the spine members among them. The verdict
/// is `hypotheses_unmet` unless every spine node passes balance_conditions;
/// otherwise it is decided by the intersection test alone.
inline auto center_containment_check(const Graph & g, const ReductionResult & r, const CentralityReport & c)
    -> ContainmentReport {
  ContainmentReport out;
  const auto & spine_nodes = r.survivors();
  out.balanced = balance_conditions(r) == spine_nodes;
  out.cc_on_spine = c.cc_center & spine_nodes;
  out.cb_on_spine = c.cb_center & spine_nodes;

  auto check = [&](const NodeSet & center, bool & intersects, bool & within) {
    intersects = true;
    within = true;
    for (const auto & comp : connected_components(g)) {
      auto local = center & comp;
      auto on_spine = local & spine_nodes;
      if (on_spine.empty()) {
        intersects = false;
        within = false;
        continue;
      }
      NodeSet reach = on_spine;
      on_spine.for_each([&](NodeId x) { reach |= g.adjacent(x); });
      if (!local.is_subset_of(reach))
        within = false;
    }
  };
  check(c.cc_center, out.cc_intersects, out.cc_within_neighborhood);
  check(c.cb_center, out.cb_intersects, out.cb_within_neighborhood);

  if (!out.balanced || spine_nodes.empty())
    out.verdict = ContainmentVerdict::hypotheses_unmet;
  else if (out.cc_intersects && out.cb_intersects)
    out.verdict = ContainmentVerdict::holds;
  else
    out.verdict = ContainmentVerdict::violated;
  return out;
}

inline auto component_diameters(const Graph & g) -> std::vector<Distance> {
  std::vector<Distance> out;
  for (const auto & comp : connected_components(g)) {
    Distance best = 0;
    comp.for_each([&](NodeId s) {
      auto d = bfs_distances(g, s);
      comp.for_each([&](NodeId t) { best = std::max(best, d[t]); });
    });
    out.push_back(best);
  }
  return out;
}

/// Longest shortest path by repeated BFS; `unreachable` when g is
/// disconnected, 0 for the empty graph.
inline auto exact_diameter(const Graph & g) -> Distance {
  auto per = component_diameters(g);
  if (per.size() > 1)
    return unreachable;
  return per.empty() ? 0 : per.front();
}

struct DiameterEstimate {
  Distance spine_diameter = 0;
  std::pair<NodeId, NodeId> endpoints{0, 0};
  Rational estimate;
  std::pair<Rational, Rational> pendant;
};

/// Pendant-community diameter heuristic: a survivor holding tau > 1 nodes
/// contributes tau/2 hops beyond itself, a bare survivor contributes nothing.
inline auto pendant_reach(std::size_t tau) -> Rational { return tau > 1 ? Rational(tau, 2) : Rational(0); }

/// Maximises pendant(u) + d_spine(u, v) + pendant(v) over spine pairs in the
/// same component, first maximal pair in (u, v) order winning ties. A
/// single-node component contributes its own pendant reach with u == v.
inline auto estimate_diameter(const ReductionResult & r) -> DiameterEstimate {
  const auto & spine = r.spine;
  if (spine.node_count() == 0)
    throw std::invalid_argument("diameter estimate of an empty spine");
  DiameterEstimate out;
  bool have = false;
  auto consider = [&](NodeId u, NodeId v, Distance d) {
    auto value = pendant_reach(r.tau[u]) + Rational(d) + (u == v ? Rational(0) : pendant_reach(r.tau[v]));
    if (!have || value > out.estimate) {
      have = true;
      out.estimate = value;
      out.endpoints = {u, v};
      out.pendant = {pendant_reach(r.tau[u]), u == v ? Rational(0) : pendant_reach(r.tau[v])};
    }
  };
  spine.nodes().for_each([&](NodeId u) {
    auto d = bfs_distances(spine, u);
    bool alone = spine.degree(u) == 0;
    if (alone)
      consider(u, u, 0);
    for (auto v = spine.nodes().next(u + 1); v < spine.universe_size(); v = spine.nodes().next(v + 1)) {
      if (d[v] == unreachable)
        continue;
      out.spine_diameter = std::max(out.spine_diameter, d[v]);
      consider(u, v, d[v]);
    }
  });
  return out;
}

} // namespace spine

#endif
