#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <spine/io.hpp>
#include <spine/pipeline.hpp>

#include "support/generators.hpp"

using namespace spine;
using namespace spine::testing;

namespace {

auto slurp(const std::string & path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in) << path;
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct CliRun {
  int status;
  std::string out;
};

auto run_cli(const std::string & args) -> CliRun {
  std::string cmd = std::string(SPINE_CLI) + " " + args + " 2>/dev/null";
  FILE * pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

auto data(const std::string & name) -> std::string { return std::string(SPINE_DATA_DIR) + "/" + name; }

} // namespace

TEST(ParseEdgeList, Examples) {
  auto p3 = parse_edge_list("a b\nb c");
  EXPECT_EQ(p3.graph.node_count(), 3U);
  EXPECT_EQ(p3.graph.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(p3.graph.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(p3.duplicate_edges, 0U);

  auto dup = parse_edge_list("a b\na b\nb a\n");
  EXPECT_EQ(dup.graph.edge_count(), 1U);
  EXPECT_EQ(dup.duplicate_edges, 2U);

  try {
    parse_edge_list("a a");
    FAIL() << "self-loop accepted";
  } catch (const ParseError & e) {
    EXPECT_EQ(e.line(), 1U);
  }
}

TEST(ParseEdgeList, CommentsNodesAndErrors) {
  auto g = parse_edge_list("# header\r\n\n  x y\r\nnode lonely\n   # indented comment\ny z\n").graph;
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"x", "y", "lonely", "z"}));
  EXPECT_EQ(g.degree(2), 0U);
  EXPECT_EQ(g.edge_count(), 2U);

  try {
    parse_edge_list("a b\n\nb c d\n");
    FAIL() << "three fields accepted";
  } catch (const ParseError & e) {
    EXPECT_EQ(e.line(), 3U);
  }
  EXPECT_THROW(parse_edge_list("lonely\n"), ParseError);
  EXPECT_EQ(parse_edge_list("").graph.node_count(), 0U);
}

TEST(ParseEdgeList, WriteThenParseReproducesGraph) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(std::uniform_int_distribution<std::size_t>(0, 40)(rng), 0.1, rng);
    auto back = parse_edge_list(write_edge_list(g));
    EXPECT_EQ(back.graph, g);
    EXPECT_EQ(back.duplicate_edges, 0U);
  }
}

TEST(WriteDot, PlainGraph) {
  auto g = parse_edge_list("a b\nb c\nc d\nd a\n").graph;
  auto dot = write_dot(g);
  EXPECT_EQ(dot, "graph network {\n"
                 "  \"a\";\n  \"b\";\n  \"c\";\n  \"d\";\n"
                 "  \"a\" -- \"b\";\n  \"a\" -- \"d\";\n  \"b\" -- \"c\";\n  \"c\" -- \"d\";\n"
                 "}\n");
  EXPECT_EQ(write_dot(g), dot);
}

TEST(WriteDot, SpineLabelsAndHighlight) {
  auto g = parse_edge_list("a b\nb c\nc d\nd e\ne a\na c\n").graph;
  auto r = reduce(g);
  auto dot = write_dot(g, &r);
  EXPECT_NE(dot.find("\"a\" [label=\"a:2\"]"), std::string::npos);
  EXPECT_EQ(dot.find("\"b\""), std::string::npos);

  Cycle hole({0, 2, 3, 4});
  auto bold = write_dot(g, &r, &hole);
  std::size_t count = 0;
  for (auto pos = bold.find("style=bold"); pos != std::string::npos; pos = bold.find("style=bold", pos + 1))
    ++count;
  EXPECT_EQ(count, 4U);

  Cycle missing({0, 1, 2});
  EXPECT_THROW(write_dot(g, &r, &missing), std::invalid_argument);
}

TEST(WriteDot, QuotesLabels) {
  auto g = parse_edge_list("say\"hi x\n").graph;
  EXPECT_NE(write_dot(g).find("\"say\\\"hi\""), std::string::npos);
}

TEST(Rational, Formatting) {
  EXPECT_EQ(to_fraction_string(Rational(71, 2)), "71/2");
  EXPECT_EQ(to_decimal_string(Rational(71, 2)), "35.5");
  EXPECT_EQ(to_decimal_string(Rational(1, 3)), "0.333333");
  EXPECT_EQ(to_decimal_string(Rational(2, 3)), "0.666667");
  EXPECT_EQ(to_decimal_string(Rational(-1, 8)), "-0.125");
  EXPECT_EQ(to_decimal_string(Rational(4)), "4");
  EXPECT_EQ(parse_fraction("71/2"), Rational(71, 2));
  EXPECT_THROW(parse_fraction("3"), std::invalid_argument);
  EXPECT_THROW(parse_fraction("3/0"), std::invalid_argument);
}

TEST(Report, GoldenEmptyGraph) {
  RunConfig cfg;
  cfg.input_name = "empty.edges";
  auto a = analyze(parse_edge_list(slurp(data("empty.edges"))), cfg);
  EXPECT_EQ(write_report(a.report), slurp(std::string(SPINE_GOLDEN_DIR) + "/empty_report.json"));
}

TEST(Report, GoldenCycle) {
  RunConfig cfg;
  cfg.input_name = "c4.edges";
  cfg.exact_diameter = true;
  auto a = analyze(parse_edge_list(slurp(data("c4.edges"))), cfg);
  EXPECT_EQ(write_report(a.report), slurp(std::string(SPINE_GOLDEN_DIR) + "/c4_report.json"));
}

TEST(Report, RoundTripAndDeterminism) {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_graph(30, 0.1, rng);
    ParsedEdgeList parsed{g, 0};
    RunConfig cfg;
    cfg.exact_diameter = trial % 2 == 0;
    cfg.visit_order = "seed:" + std::to_string(trial);
    cfg.max_k = 12;
    auto text = write_report(analyze(parsed, cfg).report);
    EXPECT_EQ(text, write_report(analyze(parsed, cfg).report));
    auto back = read_report(text);
    EXPECT_EQ(back, analyze(parsed, cfg).report);
    EXPECT_EQ(write_report(back), text);
  }
  EXPECT_THROW(read_report(R"({"schema": "other/9"})"), std::invalid_argument);
}

TEST(Pipeline, SeededOrderIsPermutationAndStable) {
  auto g = random_graph(50, 0.1, *std::make_unique<Rng>(1));
  auto a = seeded_order(g, 42);
  EXPECT_EQ(a, seeded_order(g, 42));
  EXPECT_NE(a, seeded_order(g, 43));
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, g.nodes().to_vector());
  EXPECT_THROW(parse_visit_order("random"), std::invalid_argument);
  EXPECT_THROW(parse_visit_order("seed:"), std::invalid_argument);
  EXPECT_EQ(parse_visit_order("seed:7"), std::optional<std::uint64_t>{7});
}

TEST(Pipeline, HighlightSelectsLongestCycle) {
  auto parsed = parse_edge_list(slurp(data("petersen.edges")));
  RunConfig cfg;
  cfg.command = Command::reduce;
  cfg.max_k = 6;
  cfg.highlight = "longest:3";
  auto a = analyze(parsed, cfg);
  ASSERT_TRUE(a.highlight);
  EXPECT_EQ(a.highlight->length(), 6U);
  cfg.highlight = "longest:10";
  EXPECT_THROW(analyze(parsed, cfg), std::invalid_argument);
}

TEST(Cli, ReduceTree) {
  auto run = run_cli("reduce " + data("p3.edges"));
  ASSERT_EQ(run.status, 0);
  auto rep = read_report(run.out);
  ASSERT_TRUE(rep.reduction);
  EXPECT_EQ(rep.reduction->spine_nodes, 1U);
  EXPECT_EQ(rep.reduction->survivors.at(0).tau, 3U);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run_cli("verify " + data("c4.edges")).status, 0);
  EXPECT_EQ(run_cli("verify --require-irreducible " + data("c4.edges")).status, 0);
  EXPECT_EQ(run_cli("verify --require-irreducible " + data("p3.edges")).status, 2);
  EXPECT_EQ(run_cli("verify /nonexistent/file.edges").status, 1);
  EXPECT_EQ(run_cli("reduce --max-k 2 " + data("c4.edges")).status, 1);
  EXPECT_EQ(run_cli("bogus " + data("c4.edges")).status, 1);
}

TEST(Cli, SignatureOfPetersen) {
  auto run = run_cli("signature --max-k 6 " + data("petersen.edges"));
  ASSERT_EQ(run.status, 0);
  auto rep = read_report(run.out);
  ASSERT_TRUE(rep.signature);
  EXPECT_EQ(rep.signature->counts, (std::vector<std::pair<std::size_t, std::size_t>>{{5, 12}, {6, 10}}));
  EXPECT_EQ(rep.signature->max_k_searched, 6U);
}

TEST(Cli, DeterministicFiles) {
  auto dir = ::testing::TempDir();
  auto args = [&](int i) {
    return "report --visit-order seed:5 --exact-diameter --highlight longest:0 --report " + dir + "r" +
           std::to_string(i) + ".json --dot " + dir + "d" + std::to_string(i) + ".dot " + data("c5_chord.edges");
  };
  ASSERT_EQ(run_cli(args(1)).status, 0);
  ASSERT_EQ(run_cli(args(2)).status, 0);
  EXPECT_EQ(slurp(dir + "r1.json"), slurp(dir + "r2.json"));
  EXPECT_EQ(slurp(dir + "d1.dot"), slurp(dir + "d2.dot"));
  EXPECT_NE(slurp(dir + "d1.dot").find("style=bold"), std::string::npos);
}
