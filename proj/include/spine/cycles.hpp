#ifndef SPINE_CYCLES_HPP
#define SPINE_CYCLES_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace spine {

/// Vertex cycle in canonical form: minimum vertex first, then whichever
/// direction gives the lexicographically smaller sequence.
class Cycle {
public:
  Cycle() = default;

  explicit Cycle(std::vector<NodeId> vertices) : vertices_(canonicalize(std::move(vertices))) {}

  auto vertices() const -> const std::vector<NodeId> & { return vertices_; }
  auto length() const -> std::size_t { return vertices_.size(); }

  /// Edges as (min, max) pairs, sorted.
  auto edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      auto a = vertices_[i];
      auto b = vertices_[(i + 1) % vertices_.size()];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend auto operator<=>(const Cycle &, const Cycle &) = default;

private:
  static auto canonicalize(std::vector<NodeId> v) -> std::vector<NodeId> {
    if (v.size() < 3)
      throw std::invalid_argument("a cycle needs at least 3 vertices");
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("cycle repeats a vertex");
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    if (v.back() < v[1])
      std::reverse(v.begin() + 1, v.end());
    return v;
  }

  std::vector<NodeId> vertices_;
};

/// Throws std::invalid_argument when c is not a cycle of g.
inline auto is_chordless(const Graph & g, const Cycle & c) -> bool {
  const auto & v = c.vertices();
  const auto k = v.size();
  for (auto x : v)
    if (!g.has_node(x))
      throw std::invalid_argument("cycle vertex " + std::to_string(x) + " not in graph");
  for (std::size_t i = 0; i < k; ++i)
    if (!g.has_edge(v[i], v[(i + 1) % k]))
      throw std::invalid_argument("sequence is not a cycle of the graph");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1)
        continue;
      if (g.has_edge(v[i], v[j]))
        return false;
    }
  return true;
}

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  /// False when the length cap cut off some induced path that might have
  /// closed into a longer chordless cycle.
  bool complete = true;
};

namespace detail {

struct AnchorSearch {
  AnchorSearch(const Graph & graph, std::size_t lo, std::size_t hi) : g(graph), min_k(lo), max_k(hi) {}

  const Graph & g;
  std::size_t min_k;
  std::size_t max_k;
  NodeId anchor = 0;
  NodeSet allowed;
  std::vector<Distance> back_distance;
  std::vector<NodeId> path;
  std::vector<Cycle> found;
  bool truncated = false;

  // path = anchor, p1, ..., head. `forbidden` holds the path and every
  // neighbour of its interior vertices.
  auto extend(const NodeSet & forbidden) -> void {
    const auto head = path.back();
    const auto & anchor_adj = g.adjacent(anchor);
    auto candidates = (g.adjacent(head) & allowed) - forbidden;
    candidates.for_each([&](NodeId w) {
      if (anchor_adj.contains(w)) {
        if (path.size() >= 2 && path[1] < w && path.size() + 1 >= min_k) {
          auto cyc = path;
          cyc.push_back(w);
          found.emplace_back(std::move(cyc));
        }
        return;
      }
      // Shortest possible closing cycle through w, counted in vertices.
      auto d = back_distance[w];
      if (d == unreachable)
        return;
      if (path.size() + d > max_k) {
        truncated = true;
        return;
      }
      auto next = forbidden | g.adjacent(head);
      next.insert(w);
      path.push_back(w);
      extend(next);
      path.pop_back();
    });
  }

  auto run(NodeId u) -> void {
    anchor = u;
    allowed = NodeSet(g.universe_size());
    for (auto v = g.nodes().next(u + 1); v < g.universe_size(); v = g.nodes().next(v + 1))
      allowed.insert(v);
    // BFS back to the anchor through vertices larger than it.
    back_distance.assign(g.universe_size(), unreachable);
    back_distance[u] = 0;
    std::vector<NodeId> queue{u};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto x = queue[h];
      (g.adjacent(x) & allowed).for_each([&](NodeId y) {
        if (back_distance[y] == unreachable) {
          back_distance[y] = back_distance[x] + 1;
          queue.push_back(y);
        }
      });
    }
    (g.adjacent(u) & allowed).for_each([&](NodeId v) {
      path = {u, v};
      NodeSet forbidden(g.universe_size());
      forbidden.insert(u);
      forbidden.insert(v);
      extend(forbidden);
    });
  }
};

} // namespace detail

/// Chordless cycles with min_k <= length <= max_k, each once, sorted.
///
/// Every cycle is grown from its minimum vertex as an induced path whose
/// extensions avoid all neighbours of interior vertices; it closes as soon as
/// the new head touches the anchor. Anchors are split across `threads`
/// workers; the merged result does not depend on the thread count.
inline auto find_chordless_cycles(const Graph & g, std::size_t min_k, std::size_t max_k, unsigned threads = 1)
    -> CycleEnumeration {
  if (min_k < 3 || max_k < min_k)
    throw std::invalid_argument("cycle length bounds must satisfy 3 <= min_k <= max_k");
  auto anchors = g.nodes().to_vector();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(anchors.size())));

  std::vector<std::vector<Cycle>> parts(threads);
  std::vector<char> truncated(threads, 0);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned t) {
    detail::AnchorSearch search(g, min_k, max_k);
    for (auto i = next++; i < anchors.size(); i = next++)
      search.run(anchors[i]);
    parts[t] = std::move(search.found);
    truncated[t] = search.truncated;
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

  CycleEnumeration out;
  for (unsigned t = 0; t < threads; ++t) {
    out.cycles.insert(out.cycles.end(), parts[t].begin(), parts[t].end());
    if (truncated[t])
      out.complete = false;
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  if (max_k >= g.node_count())
    out.complete = true;
  return out;
}

inline auto enumerate_chordless_cycles(const Graph & g, std::size_t min_k, std::size_t max_k, unsigned threads = 1)
    -> std::vector<Cycle> {
  return find_chordless_cycles(g, min_k, max_k, threads).cycles;
}

/// Sum of k * n_k over node_count.
inline auto connective_complexity(const std::map<std::size_t, std::size_t> & counts, std::size_t node_count)
    -> Rational {
  if (node_count == 0)
    throw std::invalid_argument("connective complexity needs a positive node count");
  BigInt total = 0;
  for (auto [k, n] : counts)
    total += BigInt(k) * n;
  return Rational(total, BigInt(node_count));
}

struct Signature {
  /// k -> number of chordless k-cycles; only nonzero entries are stored.
  std::map<std::size_t, std::size_t> counts;
  std::size_t max_k_searched = 0;
  bool complete = true;
  std::size_t node_count = 0;
  Rational cc;

  auto count(std::size_t k) const -> std::size_t {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }

  friend auto operator==(const Signature &, const Signature &) -> bool = default;
};

inline auto signature_of(const std::vector<Cycle> & cycles, std::size_t max_k, bool complete,
                         std::size_t node_count) -> Signature {
  Signature s;
  for (const auto & c : cycles)
    ++s.counts[c.length()];
  s.max_k_searched = max_k;
  s.complete = complete;
  s.node_count = node_count;
  s.cc = node_count == 0 ? Rational(0) : connective_complexity(s.counts, node_count);
  return s;
}

inline auto signature(const Graph & g, std::size_t max_k, unsigned threads = 1) -> Signature {
  auto found = find_chordless_cycles(g, 3, max_k, threads);
  return signature_of(found.cycles, max_k, found.complete, g.node_count());
}

/// Cycles of the greatest length present, in input order.
inline auto longest_cycles(std::span<const Cycle> cycles) -> std::vector<Cycle> {
  std::size_t best = 0;
  for (const auto & c : cycles)
    best = std::max(best, c.length());
  std::vector<Cycle> out;
  for (const auto & c : cycles)
    if (c.length() == best)
      out.push_back(c);
  return out;
}

struct CycleIntersection {
  NodeSet nodes;
  std::vector<Edge> edges;
};

inline auto longest_cycle_intersection(std::span<const Cycle> cycles, std::size_t universe_size)
    -> CycleIntersection {
  if (cycles.empty())
    throw std::invalid_argument("cycle intersection of an empty set");
  CycleIntersection out{NodeSet::full(universe_size), cycles.front().edges()};
  for (const auto & c : cycles) {
    NodeSet members(universe_size);
    for (auto v : c.vertices())
      members.insert(v);
    out.nodes &= members;
    auto ce = c.edges();
    std::vector<Edge> kept;
    std::set_intersection(out.edges.begin(), out.edges.end(), ce.begin(), ce.end(), std::back_inserter(kept));
    out.edges = std::move(kept);
  }
  return out;
}

/// Maximum cardinality search followed by a perfect-elimination check.
inline auto is_chordal(const Graph & g) -> bool {
  const auto n = g.universe_size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<std::size_t> position(n, 0);
  std::vector<NodeId> order;
  auto remaining = g.nodes();
  while (!remaining.empty()) {
    NodeId pick = remaining.first();
    remaining.for_each([&](NodeId v) {
      if (weight[v] > weight[pick])
        pick = v;
    });
    position[pick] = order.size();
    order.push_back(pick);
    remaining.erase(pick);
    (g.adjacent(pick) & remaining).for_each([&](NodeId v) { ++weight[v]; });
  }
  NodeSet before(n);
  for (auto v : order) {
    auto earlier = g.adjacent(v) & before;
    if (!earlier.empty()) {
      NodeId parent = earlier.first();
      earlier.for_each([&](NodeId x) {
        if (position[x] > position[parent])
          parent = x;
      });
      earlier.erase(parent);
      if (!earlier.is_subset_of(g.adjacent(parent)))
        return false;
    }
    before.insert(v);
  }
  return true;
}

/// Components with at least one edge and no chordless cycle of length >= 4.
/// A reduced spine has none: such a component would still contain a
/// simplicial, hence subsumable, node.
inline auto chordal_components(const Graph & g) -> std::vector<NodeSet> {
  std::vector<NodeSet> out;
  for (auto & comp : connected_components(g)) {
    if (comp.count() < 2)
      continue;
    if (is_chordal(induced_subgraph(g, comp)))
      out.push_back(std::move(comp));
  }
  return out;
}

} // namespace spine

#endif
