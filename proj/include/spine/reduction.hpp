#ifndef SPINE_REDUCTION_HPP
#define SPINE_REDUCTION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace spine {

struct SubsumptionEvent {
  NodeId survivor;
  NodeId victim;
  std::size_t iteration;

  friend auto operator==(const SubsumptionEvent &, const SubsumptionEvent &) -> bool = default;
};

/// Outcome of iterated subsumption removal. Per-node tables are indexed by
/// original NodeId and hold zero / empty sets for removed nodes.
struct ReductionResult {
  Graph spine;
  std::vector<std::size_t> tau;
  std::vector<NodeSet> beta;
  /// Edges removed along with the members of beta(y) other than y.
  std::vector<std::size_t> absorbed_edges;
  std::vector<SubsumptionEvent> trace;
  std::vector<NodeId> visit_order;
  std::size_t iterations = 0;

  auto survivors() const -> const NodeSet & { return spine.nodes(); }

  auto tau_of(NodeId y) const -> std::size_t {
    spine.require_node(y);
    return tau[y];
  }

  auto beta_of(NodeId y) const -> const NodeSet & {
    spine.require_node(y);
    return beta[y];
  }

  /// Survivor owning original node v.
  auto owner(NodeId v) const -> NodeId {
    NodeId found = spine.universe_size();
    spine.nodes().for_each([&](NodeId y) {
      if (beta[y].contains(v))
        found = y;
    });
    if (found == spine.universe_size())
      throw std::out_of_range("node " + std::to_string(v) + " has no owner");
    return found;
  }
};

/// True iff z is adjacent to y and every neighbor of z lies in the region
/// of y, i.e. {z}.phi is contained in {y}.phi.
inline auto subsumes(const Graph & g, NodeId y, NodeId z) -> bool {
  if (y == z)
    throw std::invalid_argument("subsumes: survivor and candidate must differ");
  g.require_node(y);
  g.require_node(z);
  if (!g.has_edge(y, z))
    return false;
  auto reg = g.adjacent(y);
  reg.insert(y);
  return g.adjacent(z).is_subset_of(reg);
}

inline auto ascending_order(const Graph & g) -> std::vector<NodeId> { return g.nodes().to_vector(); }

/// Repeats the sweep "for each y, remove every neighbor z it subsumes" until
/// a sweep removes nothing. The final, empty sweep is counted in
/// `iterations`. Victims are removed immediately, so later tests in the same
/// sweep see the updated graph.
inline auto reduce(const Graph & g, std::optional<std::span<const NodeId>> visit_order = std::nullopt)
    -> ReductionResult {
  const auto n = g.universe_size();
  ReductionResult r;
  if (visit_order) {
    r.visit_order.assign(visit_order->begin(), visit_order->end());
    NodeSet seen(n);
    for (auto v : r.visit_order) {
      if (!g.has_node(v) || seen.contains(v))
        throw std::invalid_argument("visit order is not a permutation of the graph's nodes");
      seen.insert(v);
    }
    if (seen != g.nodes())
      throw std::invalid_argument("visit order is not a permutation of the graph's nodes");
  } else {
    r.visit_order = ascending_order(g);
  }

  std::vector<NodeSet> adj(n, NodeSet(n));
  g.nodes().for_each([&](NodeId v) { adj[v] = g.adjacent(v); });
  auto alive = g.nodes();
  r.tau.assign(n, 0);
  r.beta.assign(n, NodeSet(n));
  r.absorbed_edges.assign(n, 0);
  g.nodes().for_each([&](NodeId v) {
    r.tau[v] = 1;
    r.beta[v].insert(v);
  });

  while (true) {
    ++r.iterations;
    std::size_t removed = 0;
    for (auto y : r.visit_order) {
      if (!alive.contains(y))
        continue;
      for (auto z : adj[y].to_vector()) {
        if (!adj[y].contains(z))
          continue;
        auto reg = adj[y];
        reg.insert(y);
        if (!adj[z].is_subset_of(reg))
          continue;
        r.absorbed_edges[y] += r.absorbed_edges[z] + adj[z].count();
        adj[z].for_each([&](NodeId x) { adj[x].erase(z); });
        adj[z] = NodeSet(n);
        alive.erase(z);
        r.tau[y] += r.tau[z];
        r.tau[z] = 0;
        r.beta[y] |= r.beta[z];
        r.beta[z] = NodeSet(n);
        r.absorbed_edges[z] = 0;
        r.trace.push_back({y, z, r.iterations});
        ++removed;
      }
    }
    if (removed == 0)
      break;
  }
  r.spine = induced_subgraph(g, alive);
  return r;
}

/// Every singleton is closed.
inline auto is_irreducible(const Graph & g) -> bool {
  bool ok = true;
  g.nodes().for_each([&](NodeId y) {
    if (ok) {
      auto s = singleton(g, y);
      ok = closure(g, s) == s;
    }
  });
  return ok;
}

namespace detail {

// Colour refinement run on both graphs at once so colour ids are comparable.
inline auto refine_colours(const Graph & a, const Graph & b)
    -> std::pair<std::vector<std::size_t>, std::vector<std::size_t>> {
  std::vector<std::size_t> ca(a.universe_size(), 0), cb(b.universe_size(), 0);
  a.nodes().for_each([&](NodeId v) { ca[v] = a.degree(v); });
  b.nodes().for_each([&](NodeId v) { cb[v] = b.degree(v); });
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    auto signature = [](const Graph & g, const std::vector<std::size_t> & c, NodeId v) {
      std::vector<std::size_t> sig{c[v]};
      g.adjacent(v).for_each([&](NodeId w) { sig.push_back(c[w]); });
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<std::size_t>> sa(a.universe_size()), sb(b.universe_size());
    a.nodes().for_each([&](NodeId v) { ids.emplace(sa[v] = signature(a, ca, v), 0); });
    b.nodes().for_each([&](NodeId v) { ids.emplace(sb[v] = signature(b, cb, v), 0); });
    std::size_t next = 0;
    for (auto & [sig, id] : ids)
      id = next++;
    a.nodes().for_each([&](NodeId v) { ca[v] = ids[sa[v]]; });
    b.nodes().for_each([&](NodeId v) { cb[v] = ids[sb[v]]; });
    if (next == classes)
      break;
    classes = next;
  }
  return {std::move(ca), std::move(cb)};
}

} // namespace detail

inline constexpr std::size_t isomorphism_node_limit = 64;

/// Exact isomorphism test: colour refinement followed by backtracking over
/// colour-compatible candidates. Throws std::length_error above `limit` nodes.
inline auto isomorphic(const Graph & a, const Graph & b, std::size_t limit = isomorphism_node_limit) -> bool {
  if (a.node_count() > limit || b.node_count() > limit)
    throw std::length_error("isomorphism test limited to " + std::to_string(limit) + " nodes");
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count())
    return false;
  auto [ca, cb] = detail::refine_colours(a, b);
  std::vector<std::size_t> ha, hb;
  a.nodes().for_each([&](NodeId v) { ha.push_back(ca[v]); });
  b.nodes().for_each([&](NodeId v) { hb.push_back(cb[v]); });
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb)
    return false;

  // Map a-nodes in an order that keeps each new node attached to mapped ones.
  std::vector<NodeId> order;
  NodeSet placed(a.universe_size());
  auto remaining = a.nodes();
  while (!remaining.empty()) {
    NodeId best = remaining.first();
    std::size_t best_links = 0;
    remaining.for_each([&](NodeId v) {
      auto links = (a.adjacent(v) & placed).count();
      if (links > best_links) {
        best = v;
        best_links = links;
      }
    });
    order.push_back(best);
    placed.insert(best);
    remaining.erase(best);
  }

  std::vector<NodeId> image(a.universe_size(), b.universe_size());
  NodeSet used(b.universe_size());
  auto bnodes = b.nodes().to_vector();

  auto extend = [&](auto & self, std::size_t depth) -> bool {
    if (depth == order.size())
      return true;
    auto v = order[depth];
    for (auto w : bnodes) {
      if (used.contains(w) || cb[w] != ca[v])
        continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        auto u = order[i];
        consistent = a.has_edge(v, u) == b.has_edge(w, image[u]);
      }
      if (!consistent)
        continue;
      image[v] = w;
      used.insert(w);
      if (self(self, depth + 1))
        return true;
      used.erase(w);
    }
    return false;
  };
  return extend(extend, 0);
}

} // namespace spine

#endif
