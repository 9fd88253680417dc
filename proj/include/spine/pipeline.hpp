#ifndef SPINE_PIPELINE_HPP
#define SPINE_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "centrality.hpp"
#include "cycles.hpp"
#include "io.hpp"
#include "reduction.hpp"
#include "verify.hpp"

namespace spine {

inline constexpr const char * version = "0.1.0";
inline constexpr std::size_t default_max_k = 32;

enum class Command { reduce, signature, centers, diameter, verify, report };

inline auto parse_command(const std::string & s) -> Command {
  if (s == "reduce") return Command::reduce;
  if (s == "signature") return Command::signature;
  if (s == "centers") return Command::centers;
  if (s == "diameter") return Command::diameter;
  if (s == "verify") return Command::verify;
  if (s == "report") return Command::report;
  throw std::invalid_argument("unknown command '" + s + "'");
}

inline auto to_string(Command c) -> std::string {
  switch (c) {
  case Command::reduce: return "reduce";
  case Command::signature: return "signature";
  case Command::centers: return "centers";
  case Command::diameter: return "diameter";
  case Command::verify: return "verify";
  case Command::report: return "report";
  }
  return "unknown";
}

struct RunConfig {
  Command command = Command::report;
  std::string input_name;
  std::size_t max_k = default_max_k;
  /// "ascending" or "seed:<unsigned integer>".
  std::string visit_order = "ascending";
  bool exact_diameter = false;
  /// "" for none, otherwise "longest:<index>" into the sorted longest cycles.
  std::string highlight;
  bool require_irreducible_input = false;
  unsigned threads = 1;
};

/// nullopt for "ascending".
inline auto parse_visit_order(const std::string & text) -> std::optional<std::uint64_t> {
  if (text == "ascending")
    return std::nullopt;
  const std::string prefix = "seed:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    auto digits = text.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 19)
      return std::stoull(digits);
  }
  throw std::invalid_argument("visit order must be 'ascending' or 'seed:<int>', got '" + text + "'");
}

/// Fisher-Yates over the present nodes driven directly by mt19937_64, whose
/// output sequence is fixed by the standard, so a seed means the same order
/// on every platform.
inline auto seeded_order(const Graph & g, std::uint64_t seed) -> std::vector<NodeId> {
  auto order = g.nodes().to_vector();
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do
      x = rng();
    while (x >= limit);
    std::swap(order[i - 1], order[x % bound]);
  }
  return order;
}

inline auto parse_highlight(const std::string & text) -> std::optional<std::size_t> {
  if (text.empty() || text == "none")
    return std::nullopt;
  const std::string prefix = "longest:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    auto digits = text.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") == std::string::npos)
      return std::stoull(digits);
  }
  throw std::invalid_argument("highlight must be 'longest:<index>', got '" + text + "'");
}

struct Analysis {
  AnalysisReport report;
  ReductionResult reduction;
  std::vector<Cycle> cycles;
  std::optional<Cycle> highlight;
  bool verification_failed = false;
};

namespace detail {

inline auto labels_of(const Graph & g, const NodeSet & s) -> std::vector<std::string> {
  std::vector<std::string> out;
  s.for_each([&](NodeId v) { out.push_back(g.label(v)); });
  return out;
}

inline auto label_edges(const Graph & g, const std::vector<Edge> & edges) -> std::vector<LabelEdge> {
  std::vector<LabelEdge> out;
  for (auto [u, v] : edges)
    out.emplace_back(g.label(u), g.label(v));
  return out;
}

} // namespace detail

/// reduce -> signature -> centers -> diameter, running the stages the
/// command asks for. Throws std::invalid_argument on a bad configuration.
inline auto analyze(const ParsedEdgeList & parsed, const RunConfig & config) -> Analysis {
  if (config.max_k < 3)
    throw std::invalid_argument("max_k must be at least 3");
  const auto & g = parsed.graph;
  auto seed = parse_visit_order(config.visit_order);
  auto highlight_index = parse_highlight(config.highlight);
  const auto cmd = config.command;
  const bool all = cmd == Command::report;

  Analysis a;
  auto & rep = a.report;
  rep.input = {g.node_count(), g.edge_count(), parsed.duplicate_edges};
  rep.provenance.version = version;
  rep.provenance.command = to_string(cmd);
  rep.provenance.input = config.input_name;
  rep.provenance.max_k = config.max_k;
  rep.provenance.visit_order = config.visit_order;
  rep.provenance.exact_diameter = config.exact_diameter;

  if (seed) {
    auto order = seeded_order(g, *seed);
    a.reduction = reduce(g, std::span<const NodeId>(order));
  } else {
    a.reduction = reduce(g);
  }
  const auto & r = a.reduction;
  const auto & spine = r.spine;

  {
    ReductionSummary s;
    s.spine_nodes = spine.node_count();
    s.spine_edges = spine.edge_count();
    s.iterations = r.iterations;
    s.events = r.trace.size();
    r.survivors().for_each([&](NodeId y) {
      s.survivors.push_back({g.label(y), r.tau[y], detail::labels_of(g, r.beta[y]), r.absorbed_edges[y]});
    });
    s.spine_edge_list = detail::label_edges(g, spine.edges());
    rep.reduction = std::move(s);
  }

  if (all || cmd == Command::signature || highlight_index) {
    auto found = find_chordless_cycles(spine, 3, config.max_k, config.threads);
    a.cycles = std::move(found.cycles);
    if (all || cmd == Command::signature) {
      auto sig = signature_of(a.cycles, config.max_k, found.complete, spine.node_count());
      SignatureSummary s;
      for (auto [k, n] : sig.counts)
        s.counts.emplace_back(k, n);
      s.max_k_searched = sig.max_k_searched;
      s.complete = sig.complete;
      s.cc_spine = sig.cc;
      s.cc_original = g.node_count() == 0 ? Rational(0) : connective_complexity(sig.counts, g.node_count());
      if (!a.cycles.empty()) {
        auto longest = longest_cycles(a.cycles);
        auto common = longest_cycle_intersection(longest, g.universe_size());
        LongestCycles l;
        l.length = longest.front().length();
        for (const auto & c : longest) {
          std::vector<std::string> labels;
          for (auto v : c.vertices())
            labels.push_back(g.label(v));
          l.cycles.push_back(std::move(labels));
        }
        l.common_nodes = detail::labels_of(g, common.nodes);
        l.common_edges = detail::label_edges(g, common.edges);
        s.longest = std::move(l);
      }
      rep.signature = std::move(s);
    }
    if (highlight_index) {
      auto longest = longest_cycles(a.cycles);
      if (*highlight_index >= longest.size())
        throw std::invalid_argument("highlight index " + std::to_string(*highlight_index) + " out of range; " +
                                    std::to_string(longest.size()) + " longest cycle(s) found");
      a.highlight = longest[*highlight_index];
    }
  }

  if (all || cmd == Command::centers) {
    auto c = centrality(g, config.threads);
    auto containment = center_containment_check(g, r, c);
    auto balanced = balance_conditions(r);
    CentersSummary s;
    s.distance_center = detail::labels_of(g, c.cc_center);
    s.betweenness_center = detail::labels_of(g, c.cb_center);
    s.raw_betweenness_center = detail::labels_of(g, c.raw_cb_center);
    r.survivors().for_each([&](NodeId y) {
      s.spine_nodes.push_back(
          {g.label(y), c.distance_sum[y], c.betweenness[y], c.raw_betweenness[y], balanced.contains(y)});
    });
    s.balanced = containment.balanced;
    s.verdict = to_string(containment.verdict);
    s.cc_intersects = containment.cc_intersects;
    s.cb_intersects = containment.cb_intersects;
    s.cc_within_neighborhood = containment.cc_within_neighborhood;
    s.cb_within_neighborhood = containment.cb_within_neighborhood;
    rep.centers = std::move(s);
  }

  if ((all || cmd == Command::diameter) && spine.node_count() > 0) {
    auto est = estimate_diameter(r);
    DiameterSummary s;
    if (config.exact_diameter) {
      auto d = exact_diameter(g);
      s.exact = d == unreachable ? std::optional<std::size_t>{} : std::optional<std::size_t>{d};
    }
    s.spine_diameter = est.spine_diameter;
    s.estimate = est.estimate;
    s.endpoints = {g.label(est.endpoints.first), g.label(est.endpoints.second)};
    s.pendant = est.pendant;
    rep.diameter = std::move(s);
  }

  if (all || cmd == Command::verify) {
    auto checks = verify_reduction(g, r);
    if (config.require_irreducible_input)
      checks.push_back({"input_irreducible", is_irreducible(g), ""});
    a.verification_failed = !all_passed(checks);
    rep.verification = std::move(checks);
  }
  return a;
}

} // namespace spine

#endif
