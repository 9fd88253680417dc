// Command-line front end: spine <command> <edge-list> [options]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include <spine/io.hpp>
#include <spine/pipeline.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_verification_failed = 2;

auto read_input(const std::string & path) -> std::string {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

auto write_output(const std::string & path, const std::string & text) -> void {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw std::runtime_error("cannot write '" + path + "'");
}

auto thread_count() -> unsigned {
  if (const char * env = std::getenv("SPINE_THREADS")) {
    try {
      auto n = std::stoul(env);
      if (n > 0)
        return static_cast<unsigned>(n);
    } catch (const std::exception &) {
    }
    std::cerr << "spine: ignoring invalid SPINE_THREADS='" << env << "'\n";
  }
  return 1;
}

auto basename(const std::string & path) -> std::string {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

} // namespace

int main(int argc, char ** argv) {
  CLI::App app{"Reduce an undirected network to its irreducible spine and characterise it."};
  app.set_version_flag("--version", spine::version);

  std::string command;
  std::string input;
  std::string report_path;
  std::string dot_path;
  spine::RunConfig config;

  app.add_option("command", command, "reduce | signature | centers | diameter | verify | report")
      ->required()
      ->check(CLI::IsMember({"reduce", "signature", "centers", "diameter", "verify", "report"}));
  app.add_option("input", input, "edge-list file, '-' for standard input")->required();
  app.add_option("--max-k", config.max_k, "longest chordless cycle searched")
      ->default_val(spine::default_max_k)
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 20));
  app.add_option("--visit-order", config.visit_order, "'ascending' or 'seed:<int>'")->default_val("ascending");
  app.add_flag("--exact-diameter", config.exact_diameter, "also compute the exact diameter of the input");
  app.add_option("--report", report_path, "write the JSON report here instead of standard output");
  app.add_option("--dot", dot_path, "write a DOT rendering of the spine");
  app.add_option("--highlight", config.highlight, "bold a cycle in the DOT output, e.g. 'longest:0'");
  app.add_flag("--require-irreducible", config.require_irreducible_input,
               "verify: also fail unless the input itself is irreducible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    auto code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    config.command = spine::parse_command(command);
    config.input_name = input == "-" ? "-" : basename(input);
    config.threads = thread_count();

    auto parsed = spine::parse_edge_list(read_input(input));
    if (parsed.duplicate_edges > 0)
      std::cerr << "spine: collapsed " << parsed.duplicate_edges << " duplicate edge(s)\n";

    auto analysis = spine::analyze(parsed, config);
    write_output(report_path, spine::write_report(analysis.report));
    if (!dot_path.empty()) {
      const auto * hl = analysis.highlight ? &*analysis.highlight : nullptr;
      write_output(dot_path, spine::write_dot(parsed.graph, &analysis.reduction, hl));
    }

    if (config.command == spine::Command::verify && analysis.verification_failed) {
      for (const auto & c : *analysis.report.verification)
        if (!c.passed)
          std::cerr << "spine: check " << c.name << " failed: " << c.detail << "\n";
      return exit_verification_failed;
    }
    return exit_ok;
  } catch (const spine::ParseError & e) {
    std::cerr << "spine: " << input << ": " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception & e) {
    std::cerr << "spine: " << e.what() << "\n";
    return exit_input_error;
  }
}
