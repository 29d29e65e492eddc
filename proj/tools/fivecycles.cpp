// fivecycles: analyze cubic graphs, check the claims behind the "all
// 2-factors are 5-cycles" characterization, and run the exhaustive scan.
//
// Exit codes: 0 success, 1 a premise-positive graph other than the Petersen
// graph was found, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fivecycles/connectivity.hpp"
#include "fivecycles/enumeration.hpp"
#include "fivecycles/formats.hpp"
#include "fivecycles/report.hpp"
#include "fivecycles/verifier.hpp"

namespace {

using namespace fivecycles;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string input = "-";
  std::string format = "auto";
  std::string output = "text";
  int n_max = 0;  // 0: pick the default for the graph class
  int n = 0;
  bool allow_multi = false;
  int jobs = 1;
};

int default_jobs() {
  if (const char* env = std::getenv("FIVECYCLES_JOBS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string slurp(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

GraphFormat detect_format(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    if (c >= '0' && c <= '9') return GraphFormat::EdgeList;
    if (c == ':' || text.find(">>sparse6<<") != std::string::npos) return GraphFormat::Sparse6;
    return GraphFormat::Graph6;
  }
  throw FormatError("input is empty");
}

std::vector<CubicGraph> load(const CliConfig& config) {
  const std::string text = slurp(config.input);
  const auto format = config.format == "auto" ? detect_format(text) : parse_format_name(config.format);
  std::istringstream in(text);
  auto graphs = read_graphs(in, format);
  if (graphs.empty()) throw FormatError("no graph in input");
  return graphs;
}

CubicGraph load_one(const CliConfig& config) {
  auto graphs = load(config);
  if (graphs.size() != 1) {
    throw FormatError("expected exactly one graph, found " + std::to_string(graphs.size()) +
                      " (use `scan --input` for corpora)");
  }
  return std::move(graphs.front());
}

void print(const CliConfig& config, const nlohmann::json& doc, const std::string& text) {
  if (config.output == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int cmd_analyze(const CliConfig& config) {
  const auto a = analyze(load_one(config));
  print(config, to_json(a), to_text(a));
  return kExitOk;
}

int cmd_verify(const CliConfig& config) {
  const auto report = verify_claims(load_one(config));
  print(config, to_json(report), to_text(report));
  return report.consistent_with_theorem() ? kExitOk : kExitFalsified;
}

int cmd_scan(const CliConfig& config) {
  ScanReport report;
  if (config.input != "-" || config.format != "auto") {
    report = scan_corpus(load(config), config.jobs, config.input);
  } else {
    const int n_max = config.n_max != 0 ? config.n_max : (config.allow_multi ? 10 : 14);
    report = scan_theorem(n_max, config.allow_multi, config.jobs);
  }
  print(config, to_json(report), to_text(report));
  return report.matches_theorem() ? kExitOk : kExitFalsified;
}

int cmd_generate(const CliConfig& config) {
  const bool graph6 = config.format == "graph6" || config.format == "g6";
  if (graph6 && config.allow_multi) throw FormatError("graph6 cannot hold multigraphs; use sparse6");
  if (!graph6 && config.format != "auto" && config.format != "sparse6" && config.format != "s6") {
    throw FormatError("generate writes sparse6 or graph6, not " + config.format);
  }
  generate_cubic_graphs(config.n, config.allow_multi, [&](const CubicGraph& g) {
    std::cout << (graph6 ? emit_graph6(g) : emit_sparse6(g)) << '\n';
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic graph 2-factor toolkit: analysis, claim verification, exhaustive scans"};
  app.require_subcommand(1);

  CliConfig config;
  config.jobs = default_jobs();

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", config.input, "Input file, or - for standard input");
    sub->add_option("--format,-f", config.format, "auto, graph6, sparse6 or edgelist")
        ->check(CLI::IsMember({"auto", "graph6", "g6", "sparse6", "s6", "edgelist", "edges"}));
    sub->add_option("--output,-o", config.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Girth, connectivity, matchings and 2-factor spectra of one graph");
  add_io(analyze_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Evaluate every structural claim on one graph");
  add_io(verify_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive search for graphs whose 2-factors are all 5-cycles");
  add_io(scan_cmd);
  scan_cmd->add_option("--n-max", config.n_max, "Largest (even) vertex count to generate");
  scan_cmd->add_flag("--multi", config.allow_multi, "Include multigraphs");
  scan_cmd->add_option("--jobs,-j", config.jobs, "Worker threads (default: $FIVECYCLES_JOBS or all cores)")
      ->check(CLI::PositiveNumber);

  auto* generate_cmd = app.add_subcommand("generate", "Write every connected cubic graph on n vertices");
  generate_cmd->add_option("--n", config.n, "Vertex count")->required();
  generate_cmd->add_flag("--multi", config.allow_multi, "Include multigraphs");
  generate_cmd->add_option("--format,-f", config.format, "sparse6 (default) or graph6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(config);
    if (*verify_cmd) return cmd_verify(config);
    if (*scan_cmd) return cmd_scan(config);
    if (*generate_cmd) return cmd_generate(config);
  } catch (const GraphError& e) {
    std::cerr << "invalid graph: " << e.what() << '\n';
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const EnumerationError& e) {
    std::cerr << "bad range: " << e.what() << '\n';
  } catch (const DisconnectedGraphError& e) {
    std::cerr << "invalid graph: " << e.what() << '\n';
  }
  return kExitUsage;
}
