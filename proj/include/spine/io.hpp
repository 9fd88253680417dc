#ifndef SPINE_IO_HPP
#define SPINE_IO_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cycles.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "reduction.hpp"

namespace spine {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string & what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  auto line() const -> std::size_t { return line_; }

private:
  std::size_t line_;
};

struct ParsedEdgeList {
  Graph graph;
  std::size_t duplicate_edges = 0;
};

/// One edge per line as two whitespace-separated labels. '#' starts a
/// comment line, blank lines are skipped, and "node <label>" declares a node
/// without edges. Labels become NodeIds in order of first appearance.
/// Repeated edges (either orientation) are collapsed and counted.
inline auto parse_edge_list(std::string_view text) -> ParsedEdgeList {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<Edge> edges;
  std::map<Edge, bool> seen;
  std::size_t duplicates = 0;

  auto intern = [&](const std::string & label) {
    auto [it, fresh] = ids.emplace(label, labels.size());
    if (fresh)
      labels.push_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();

    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;)
      tok.push_back(t);
    if (tok.empty() || tok.front().front() == '#')
      continue;
    if (tok.size() != 2)
      throw ParseError(line_no, "expected two labels, found " + std::to_string(tok.size()) + " fields");
    if (tok[0] == "node") {
      intern(tok[1]);
      continue;
    }
    if (tok[0] == tok[1])
      throw ParseError(line_no, "self-loop on '" + tok[0] + "'");
    auto u = intern(tok[0]);
    auto v = intern(tok[1]);
    Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.emplace(key, true).second) {
      ++duplicates;
      continue;
    }
    edges.emplace_back(u, v);
  }
  auto n = labels.size();
  return {Graph(n, edges, std::move(labels)), duplicates};
}

/// Inverse of parse_edge_list: every node is declared first, so ids survive
/// a round trip for graphs without masked nodes.
inline auto write_edge_list(const Graph & g) -> std::string {
  std::string out;
  g.nodes().for_each([&](NodeId v) { out += "node " + g.label(v) + "\n"; });
  for (auto [u, v] : g.edges())
    out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

namespace detail {

inline auto dot_quote(const std::string & s) -> std::string {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace detail

/// DOT rendering of g, or of the spine when a reduction is given (nodes
/// then read "label:tau"). Edges of `highlight` are drawn bold.
inline auto write_dot(const Graph & g, const ReductionResult * r = nullptr, const Cycle * highlight = nullptr)
    -> std::string {
  if (r != nullptr && r->spine.universe_size() != g.universe_size())
    throw std::invalid_argument("reduction does not belong to this graph");
  const Graph & shown = r != nullptr ? r->spine : g;
  std::vector<Edge> bold;
  if (highlight != nullptr) {
    const auto & v = highlight->vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto a = v[i];
      auto b = v[(i + 1) % v.size()];
      if (!shown.has_node(a) || !shown.has_node(b) || !shown.has_edge(a, b))
        throw std::invalid_argument("highlighted cycle is not a cycle of the rendered graph");
    }
    bold = highlight->edges();
  }

  std::ostringstream out;
  out << "graph " << (r != nullptr ? "spine" : "network") << " {\n";
  shown.nodes().for_each([&](NodeId v) {
    out << "  " << detail::dot_quote(shown.label(v));
    if (r != nullptr)
      out << " [label=" << detail::dot_quote(shown.label(v) + ":" + std::to_string(r->tau[v])) << "]";
    out << ";\n";
  });
  for (auto e : shown.edges()) {
    out << "  " << detail::dot_quote(shown.label(e.first)) << " -- " << detail::dot_quote(shown.label(e.second));
    if (std::binary_search(bold.begin(), bold.end(), e))
      out << " [style=bold, penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Analysis report. Every node reference is an external label.

inline constexpr const char * report_schema = "spine-report/1";

using LabelEdge = std::pair<std::string, std::string>;

struct InputSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t duplicate_edges = 0;
  friend auto operator==(const InputSummary &, const InputSummary &) -> bool = default;
};

struct SurvivorEntry {
  std::string label;
  std::size_t tau = 0;
  std::vector<std::string> beta;
  std::size_t absorbed_edges = 0;
  friend auto operator==(const SurvivorEntry &, const SurvivorEntry &) -> bool = default;
};

struct ReductionSummary {
  std::size_t spine_nodes = 0;
  std::size_t spine_edges = 0;
  std::size_t iterations = 0;
  std::size_t events = 0;
  std::vector<SurvivorEntry> survivors;
  std::vector<LabelEdge> spine_edge_list;
  friend auto operator==(const ReductionSummary &, const ReductionSummary &) -> bool = default;
};

struct LongestCycles {
  std::size_t length = 0;
  std::vector<std::vector<std::string>> cycles;
  std::vector<std::string> common_nodes;
  std::vector<LabelEdge> common_edges;
  friend auto operator==(const LongestCycles &, const LongestCycles &) -> bool = default;
};

struct SignatureSummary {
  std::vector<std::pair<std::size_t, std::size_t>> counts;
  std::size_t max_k_searched = 0;
  bool complete = true;
  Rational cc_spine;
  Rational cc_original;
  std::optional<LongestCycles> longest;
  friend auto operator==(const SignatureSummary &, const SignatureSummary &) -> bool = default;
};

struct NodeCentrality {
  std::string label;
  std::size_t distance_sum = 0;
  Rational betweenness;
  BigInt raw_betweenness;
  bool balanced = false;
  friend auto operator==(const NodeCentrality &, const NodeCentrality &) -> bool = default;
};

struct CentersSummary {
  std::vector<std::string> distance_center;
  std::vector<std::string> betweenness_center;
  std::vector<std::string> raw_betweenness_center;
  std::vector<NodeCentrality> spine_nodes;
  bool balanced = false;
  std::string verdict;
  bool cc_intersects = false;
  bool cb_intersects = false;
  bool cc_within_neighborhood = false;
  bool cb_within_neighborhood = false;
  friend auto operator==(const CentersSummary &, const CentersSummary &) -> bool = default;
};

struct DiameterSummary {
  /// Present only when the exact diameter was requested; nullopt inside
  /// means the graph is disconnected (serialized as "inf").
  std::optional<std::optional<std::size_t>> exact;
  std::size_t spine_diameter = 0;
  Rational estimate;
  LabelEdge endpoints;
  std::pair<Rational, Rational> pendant;
  friend auto operator==(const DiameterSummary &, const DiameterSummary &) -> bool = default;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  friend auto operator==(const CheckResult &, const CheckResult &) -> bool = default;
};

struct Provenance {
  std::string tool = "spine";
  std::string version;
  std::string command;
  std::string input;
  std::size_t max_k = 0;
  std::string visit_order;
  bool exact_diameter = false;
  friend auto operator==(const Provenance &, const Provenance &) -> bool = default;
};

struct AnalysisReport {
  std::string schema = report_schema;
  InputSummary input;
  std::optional<ReductionSummary> reduction;
  std::optional<SignatureSummary> signature;
  std::optional<CentersSummary> centers;
  std::optional<DiameterSummary> diameter;
  std::optional<std::vector<CheckResult>> verification;
  Provenance provenance;
  friend auto operator==(const AnalysisReport &, const AnalysisReport &) -> bool = default;
};

namespace detail {

using nlohmann::json;

inline auto rational_json(const Rational & r) -> json {
  return json{{"exact", to_fraction_string(r)}, {"decimal", to_decimal_string(r)}};
}

inline auto rational_from(const json & j) -> Rational { return parse_fraction(j.at("exact").get<std::string>()); }

inline auto edges_json(const std::vector<LabelEdge> & edges) -> json {
  auto out = json::array();
  for (const auto & [a, b] : edges)
    out.push_back(json::array({a, b}));
  return out;
}

inline auto edges_from(const json & j) -> std::vector<LabelEdge> {
  std::vector<LabelEdge> out;
  for (const auto & e : j)
    out.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return out;
}

inline auto report_to_json(const AnalysisReport & r) -> json {
  json j;
  j["schema"] = r.schema;
  j["input"] = {{"nodes", r.input.nodes}, {"edges", r.input.edges}, {"duplicate_edges", r.input.duplicate_edges}};

  if (r.reduction) {
    const auto & s = *r.reduction;
    auto survivors = json::array();
    for (const auto & e : s.survivors)
      survivors.push_back({{"label", e.label}, {"tau", e.tau}, {"beta", e.beta}, {"absorbed_edges", e.absorbed_edges}});
    j["reduction"] = {{"spine_nodes", s.spine_nodes},
                      {"spine_edges", s.spine_edges},
                      {"iterations", s.iterations},
                      {"events", s.events},
                      {"survivors", survivors},
                      {"spine_edge_list", edges_json(s.spine_edge_list)}};
  }

  if (r.signature) {
    const auto & s = *r.signature;
    auto counts = json::array();
    for (auto [k, n] : s.counts)
      counts.push_back(json::array({k, n}));
    json sig = {{"counts", counts},
                {"max_k_searched", s.max_k_searched},
                {"complete", s.complete},
                {"cc_spine", rational_json(s.cc_spine)},
                {"cc_original", rational_json(s.cc_original)}};
    if (s.longest)
      sig["longest"] = {{"length", s.longest->length},
                        {"cycles", s.longest->cycles},
                        {"common_nodes", s.longest->common_nodes},
                        {"common_edges", edges_json(s.longest->common_edges)}};
    j["signature"] = sig;
  }

  if (r.centers) {
    const auto & c = *r.centers;
    auto nodes = json::array();
    for (const auto & n : c.spine_nodes)
      nodes.push_back({{"label", n.label},
                       {"distance_sum", n.distance_sum},
                       {"betweenness", rational_json(n.betweenness)},
                       {"raw_betweenness", n.raw_betweenness.str()},
                       {"balanced", n.balanced}});
    j["centers"] = {{"distance_center", c.distance_center},
                    {"betweenness_center", c.betweenness_center},
                    {"raw_betweenness_center", c.raw_betweenness_center},
                    {"spine_nodes", nodes},
                    {"balanced", c.balanced},
                    {"containment",
                     {{"verdict", c.verdict},
                      {"cc_intersects", c.cc_intersects},
                      {"cb_intersects", c.cb_intersects},
                      {"cc_within_neighborhood", c.cc_within_neighborhood},
                      {"cb_within_neighborhood", c.cb_within_neighborhood}}}};
  }

  if (r.diameter) {
    const auto & d = *r.diameter;
    json dj = {{"spine_diameter", d.spine_diameter},
               {"estimate", rational_json(d.estimate)},
               {"endpoints", json::array({d.endpoints.first, d.endpoints.second})},
               {"pendant", json::array({rational_json(d.pendant.first), rational_json(d.pendant.second)})}};
    if (d.exact) {
      if (*d.exact)
        dj["exact"] = **d.exact;
      else
        dj["exact"] = "inf";
    }
    j["diameter"] = dj;
  }

  if (r.verification) {
    auto checks = json::array();
    for (const auto & c : *r.verification)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["verification"] = checks;
  }

  const auto & p = r.provenance;
  j["provenance"] = {{"tool", p.tool},         {"version", p.version},         {"command", p.command},
                     {"input", p.input},       {"max_k", p.max_k},             {"visit_order", p.visit_order},
                     {"exact_diameter", p.exact_diameter}};
  return j;
}

inline auto report_from_json(const json & j) -> AnalysisReport {
  AnalysisReport r;
  r.schema = j.at("schema").get<std::string>();
  if (r.schema != report_schema)
    throw std::invalid_argument("unsupported report schema '" + r.schema + "'");
  const auto & in = j.at("input");
  r.input = {in.at("nodes").get<std::size_t>(), in.at("edges").get<std::size_t>(),
             in.at("duplicate_edges").get<std::size_t>()};

  if (j.contains("reduction")) {
    const auto & s = j["reduction"];
    ReductionSummary out;
    out.spine_nodes = s.at("spine_nodes").get<std::size_t>();
    out.spine_edges = s.at("spine_edges").get<std::size_t>();
    out.iterations = s.at("iterations").get<std::size_t>();
    out.events = s.at("events").get<std::size_t>();
    for (const auto & e : s.at("survivors"))
      out.survivors.push_back({e.at("label").get<std::string>(), e.at("tau").get<std::size_t>(),
                               e.at("beta").get<std::vector<std::string>>(),
                               e.at("absorbed_edges").get<std::size_t>()});
    out.spine_edge_list = edges_from(s.at("spine_edge_list"));
    r.reduction = std::move(out);
  }

  if (j.contains("signature")) {
    const auto & s = j["signature"];
    SignatureSummary out;
    for (const auto & c : s.at("counts"))
      out.counts.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    out.max_k_searched = s.at("max_k_searched").get<std::size_t>();
    out.complete = s.at("complete").get<bool>();
    out.cc_spine = rational_from(s.at("cc_spine"));
    out.cc_original = rational_from(s.at("cc_original"));
    if (s.contains("longest")) {
      const auto & l = s["longest"];
      out.longest = LongestCycles{l.at("length").get<std::size_t>(),
                                  l.at("cycles").get<std::vector<std::vector<std::string>>>(),
                                  l.at("common_nodes").get<std::vector<std::string>>(),
                                  edges_from(l.at("common_edges"))};
    }
    r.signature = std::move(out);
  }

  if (j.contains("centers")) {
    const auto & c = j["centers"];
    CentersSummary out;
    out.distance_center = c.at("distance_center").get<std::vector<std::string>>();
    out.betweenness_center = c.at("betweenness_center").get<std::vector<std::string>>();
    out.raw_betweenness_center = c.at("raw_betweenness_center").get<std::vector<std::string>>();
    for (const auto & n : c.at("spine_nodes"))
      out.spine_nodes.push_back({n.at("label").get<std::string>(), n.at("distance_sum").get<std::size_t>(),
                                 rational_from(n.at("betweenness")), BigInt(n.at("raw_betweenness").get<std::string>()),
                                 n.at("balanced").get<bool>()});
    out.balanced = c.at("balanced").get<bool>();
    const auto & k = c.at("containment");
    out.verdict = k.at("verdict").get<std::string>();
    out.cc_intersects = k.at("cc_intersects").get<bool>();
    out.cb_intersects = k.at("cb_intersects").get<bool>();
    out.cc_within_neighborhood = k.at("cc_within_neighborhood").get<bool>();
    out.cb_within_neighborhood = k.at("cb_within_neighborhood").get<bool>();
    r.centers = std::move(out);
  }

  if (j.contains("diameter")) {
    const auto & d = j["diameter"];
    DiameterSummary out;
    if (d.contains("exact")) {
      if (d["exact"].is_string())
        out.exact = std::optional<std::size_t>{};
      else
        out.exact = std::optional<std::size_t>{d["exact"].get<std::size_t>()};
    }
    out.spine_diameter = d.at("spine_diameter").get<std::size_t>();
    out.estimate = rational_from(d.at("estimate"));
    out.endpoints = {d.at("endpoints").at(0).get<std::string>(), d.at("endpoints").at(1).get<std::string>()};
    out.pendant = {rational_from(d.at("pendant").at(0)), rational_from(d.at("pendant").at(1))};
    r.diameter = std::move(out);
  }

  if (j.contains("verification")) {
    std::vector<CheckResult> checks;
    for (const auto & c : j["verification"])
      checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    r.verification = std::move(checks);
  }

  const auto & p = j.at("provenance");
  r.provenance = {p.at("tool").get<std::string>(),     p.at("version").get<std::string>(),
                  p.at("command").get<std::string>(),  p.at("input").get<std::string>(),
                  p.at("max_k").get<std::size_t>(),    p.at("visit_order").get<std::string>(),
                  p.at("exact_diameter").get<bool>()};
  return r;
}

} // namespace detail

/// Canonical JSON: sorted keys, two-space indent, rationals as exact "p/q"
/// strings with a rounded decimal beside them, trailing newline.
inline auto write_report(const AnalysisReport & report) -> std::string {
  return detail::report_to_json(report).dump(2) + "\n";
}

inline auto read_report(std::string_view text) -> AnalysisReport {
  return detail::report_from_json(nlohmann::json::parse(text));
}

} // namespace spine

#endif
