#ifndef SPINE_VERIFY_HPP
#define SPINE_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cycles.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "reduction.hpp"

namespace spine {

/// Spines at or below this size get exhaustive distance checks; larger ones
/// are checked from a deterministic sample of sources.
inline constexpr std::size_t exhaustive_distance_limit = 512;
inline constexpr std::size_t sampled_distance_sources = 64;

/// Structural checks of a reduction against the graph it came from.
inline auto verify_reduction(const Graph & g, const ReductionResult & r) -> std::vector<CheckResult> {
  std::vector<CheckResult> out;
  const auto n = g.universe_size();
  const auto & spine = r.spine;
  const auto & survivors = r.survivors();

  out.push_back({"spine_irreducible", is_irreducible(spine), ""});

  {
    std::size_t sum = 0;
    bool ok = true;
    NodeSet covered(n);
    std::string detail;
    survivors.for_each([&](NodeId y) {
      sum += r.tau[y];
      if (!r.beta[y].contains(y) || r.tau[y] != r.beta[y].count() || r.beta[y].intersects(covered)) {
        ok = false;
        detail = "bad beta for " + g.label(y);
      }
      covered |= r.beta[y];
    });
    if (covered != g.nodes()) {
      ok = false;
      detail = "beta sets do not cover the node set";
    }
    if (sum != g.node_count()) {
      ok = false;
      detail = "sum of tau is " + std::to_string(sum) + ", expected " + std::to_string(g.node_count());
    }
    out.push_back({"tau_conservation", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    survivors.for_each([&](NodeId y) {
      if (spine.degree(y) == 1) {
        ok = false;
        detail = g.label(y) + " has spine degree 1";
      }
    });
    out.push_back({"spine_min_degree", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    auto sources = survivors.to_vector();
    std::size_t stride = 1;
    if (sources.size() > exhaustive_distance_limit)
      stride = sources.size() / sampled_distance_sources;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < sources.size() && ok; i += stride) {
      auto s = sources[i];
      auto in_spine = bfs_distances(spine, s);
      auto in_graph = bfs_distances(g, s);
      survivors.for_each([&](NodeId t) {
        if (ok && in_spine[t] != in_graph[t]) {
          ok = false;
          detail = "d(" + g.label(s) + ", " + g.label(t) + ") changed";
        }
      });
      ++checked;
    }
    if (ok)
      detail = std::to_string(checked) + " sources checked";
    out.push_back({"distance_preservation", ok, detail});
  }

  {
    auto chordal = chordal_components(spine);
    out.push_back({"no_chordal_component", chordal.empty(),
                   chordal.empty() ? "" : std::to_string(chordal.size()) + " chordal component(s) survived"});
  }

  {
    // Replay the trace on a fresh copy and require every step to be a legal
    // subsumption of a live neighbour.
    std::vector<NodeSet> adj(n, NodeSet(n));
    g.nodes().for_each([&](NodeId v) { adj[v] = g.adjacent(v); });
    auto alive = g.nodes();
    bool ok = true;
    std::string detail;
    for (const auto & e : r.trace) {
      if (!ok)
        break;
      auto reg = adj[e.survivor];
      reg.insert(e.survivor);
      if (!alive.contains(e.survivor) || !alive.contains(e.victim) || !adj[e.survivor].contains(e.victim) ||
          !adj[e.victim].is_subset_of(reg)) {
        ok = false;
        detail = "illegal step " + g.label(e.survivor) + " <- " + g.label(e.victim);
        break;
      }
      adj[e.victim].for_each([&](NodeId x) { adj[x].erase(e.victim); });
      adj[e.victim] = NodeSet(n);
      alive.erase(e.victim);
    }
    if (ok && alive != survivors) {
      ok = false;
      detail = "replayed survivors differ";
    }
    out.push_back({"trace_replay", ok, detail});
  }

  {
    std::size_t absorbed = 0;
    survivors.for_each([&](NodeId y) { absorbed += r.absorbed_edges[y]; });
    bool ok = absorbed + spine.edge_count() == g.edge_count();
    out.push_back({"edge_conservation", ok, ok ? "" : "absorbed + spine edges != input edges"});
  }

  return out;
}

inline auto all_passed(const std::vector<CheckResult> & checks) -> bool {
  for (const auto & c : checks)
    if (!c.passed)
      return false;
  return true;
}

} // namespace spine

#endif
