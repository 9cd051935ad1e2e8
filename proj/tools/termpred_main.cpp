#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "termpred/oracle.hpp"
#include "termpred/parser.hpp"
#include "termpred/predict.hpp"
#include "termpred/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitError = 2;     // parse error or floundering
constexpr int kExitResource = 3;  // resource-exceeded

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_trace(const termpred::Report& rep, const std::string& path) {
  if (!rep.tree) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    out << termpred::tree_to_json(*rep.tree).dump(2) << '\n';
  else
    termpred::write_dot(*rep.tree, out);
}

void print_mode_table(const std::vector<termpred::Report>& reports) {
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.query.size());
  std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "query"
            << std::setw(28) << "verdict" << std::setw(10) << "nodes"
            << "time(ms)\n";
  for (const auto& r : reports) {
    std::string verdict = termpred::verdict_name(r.verdict);
    if (r.inferred) verdict += " (inferred)";
    std::cout << std::left << std::setw(static_cast<int>(width) + 2)
              << r.query << std::setw(28) << verdict << std::setw(10)
              << r.node_count << std::fixed << std::setprecision(1)
              << r.elapsed_ms << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"termination prediction for logic programs"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand(
      "analyze", "analyze a program file with a query or all query modes");
  std::string file;
  std::string query_text;
  std::string goal_text;
  bool all_modes = false;
  unsigned r = 3;
  std::string pruning_text = "variants";
  std::size_t max_nodes = 1'000'000;
  double timeout = 240.0;
  std::string format = "text";
  std::string trace_path;

  analyze->add_option("file", file, "program file")->required();
  auto* q_opt = analyze->add_option(
      "--query", query_text, "query with modes, e.g. \"append(i,o,o)\"");
  auto* g_opt = analyze->add_option("--goal", goal_text,
                                    "concrete goal, e.g. \"p(f(a),X)\"");
  auto* a_opt = analyze->add_flag("--all-modes", all_modes,
                                  "analyze every most general moded query");
  q_opt->excludes(g_opt)->excludes(a_opt);
  g_opt->excludes(a_opt);
  analyze->add_option("-r", r, "repetition number (>= 2)")
      ->check(CLI::Range(2u, 10000u));
  analyze->add_option("--pruning", pruning_text, "none|variants|loop-goals")
      ->check(CLI::IsMember({"none", "variants", "loop-goals"}));
  std::uint32_t max_depth = 20'000;
  analyze->add_option("--max-nodes", max_nodes, "node limit");
  analyze->add_option("--max-depth", max_depth, "derivation length limit");
  analyze->add_option("--timeout", timeout, "wall-clock limit in seconds");
  analyze->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--trace", trace_path,
                      "write the final tree (.dot, or .json)");

  CLI11_PARSE(app, argc, argv);

  if (!*q_opt && !*g_opt && !all_modes) {
    std::cerr << "error: one of --query, --goal, --all-modes is required\n";
    return kExitUsage;
  }

  try {
    termpred::Program program = termpred::parse_program(read_file(file));
    termpred::PredictorConfig cfg;
    cfg.r = r;
    cfg.pruning = *termpred::pruning_from_name(pruning_text);
    cfg.limits.max_nodes = max_nodes;
    cfg.limits.max_depth = max_depth;
    cfg.limits.timeout_seconds = timeout;

    if (all_modes) {
      std::vector<termpred::Report> reports =
          termpred::run_all_modes(program, cfg);
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& rep : reports)
          j.push_back(termpred::report_to_json(rep));
        std::cout << j.dump(2) << '\n';
      } else {
        print_mode_table(reports);
      }
      for (const auto& rep : reports)
        if (rep.verdict == termpred::Verdict::ResourceExceeded)
          return kExitResource;
      return kExitOk;
    }

    termpred::Query query =
        termpred::parse_query(*q_opt ? query_text : goal_text);
    if (*g_opt && query.moded()) {
      std::cerr << "error: --goal expects a concrete goal; use --query for "
                   "moded queries\n";
      return kExitUsage;
    }
    termpred::Report rep = termpred::predict(program, query, cfg);
    if (format == "json")
      std::cout << termpred::report_to_json(rep).dump(2) << '\n';
    else
      std::cout << termpred::report_to_text(rep);
    if (!trace_path.empty()) write_trace(rep, trace_path);
    return rep.verdict == termpred::Verdict::ResourceExceeded ? kExitResource
                                                              : kExitOk;
  } catch (const termpred::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const termpred::FlounderError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
