#ifndef STPATHS_CLI_HPP
#define STPATHS_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stpaths/enum_directed.hpp"
#include "stpaths/enum_undirected.hpp"
#include "stpaths/errors.hpp"
#include "stpaths/io.hpp"
#include "stpaths/shortest_paths.hpp"
#include "stpaths/unified_traversal.hpp"

namespace stpaths {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_parse = 2,
  exit_negative_cycle = 3,
  exit_verify_failed = 4,
};

namespace detail {

enum class Engine { recursive, lcp, lifo, min_key };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::recursive: return "recursive";
    case Engine::lcp: return "lcp";
    case Engine::lifo: return "iterative-lifo";
    case Engine::min_key: return "iterative-minkey";
  }
  return "?";
}

/// Picks the engine from --engine / --order. Returns nullopt on a conflict.
inline std::optional<Engine> resolve_engine(const std::string& engine, const std::string& order,
                                            bool undirected, std::string& why) {
  if (engine == "lcp" && !undirected) {
    why = "--engine lcp needs --undirected";
    return std::nullopt;
  }
  if (order.empty()) {
    if (engine == "recursive") return Engine::recursive;
    if (engine == "lcp") return Engine::lcp;
    if (engine == "iterative") return Engine::lifo;
    return undirected ? Engine::lcp : Engine::recursive;
  }
  if (order == "dfs") {
    if (engine.empty() || engine == "recursive") return Engine::recursive;
    if (engine == "lcp") return Engine::lcp;
  } else if (order == "reverse-dfs") {
    if (engine.empty() || engine == "iterative") return Engine::lifo;
  } else if (order == "shortest-first") {
    if (engine.empty() || engine == "iterative") return Engine::min_key;
  }
  why = "--order " + order + " cannot be combined with --engine " + engine;
  return std::nullopt;
}

inline Graph load_graph(const std::string& file, bool undirected) {
  std::ifstream in(file);
  if (!in) throw ParseError(0, "cannot open '" + file + "'");
  return parse_graph(in, undirected);
}

inline bool write_report(const std::string& file, const RunReport& report, std::ostream& err) {
  if (file.empty()) return true;
  std::ofstream os(file);
  if (!os) {
    err << "error: cannot write stats file '" << file << "'\n";
    return false;
  }
  report.write(os);
  return true;
}

/// Emission sink that prints path lines and tracks inter-emission gaps.
class PathPrinter {
 public:
  PathPrinter(std::ostream& out, const Graph& original, bool reweighted)
      : out_(out), original_(original), reweighted_(reweighted), start_(clock::now()), last_(start_) {}

  void operator()(const Path& p) {
    const Weight w = reweighted_ ? path_weight(original_, p) : p.weight;
    out_ << format_path_line(p, w) << '\n' << std::flush;
    const auto now = clock::now();
    max_gap_ = std::max(max_gap_, ms(now - last_));
    last_ = now;
  }

  void finish(RunReport& report) {
    const auto now = clock::now();
    max_gap_ = std::max(max_gap_, ms(now - last_));
    report.wall_total_ms = ms(now - start_);
    report.wall_max_gap_ms = max_gap_;
  }

 private:
  using clock = std::chrono::steady_clock;
  static double ms(clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); }

  std::ostream& out_;
  const Graph& original_;
  bool reweighted_;
  clock::time_point start_;
  clock::time_point last_;
  double max_gap_ = 0;
};

}  // namespace detail

/// Entry point of the `stpaths` tool; args exclude the program name.
///
///   stpaths enumerate --alpha A --source S --target T [--undirected]
///                     [--engine recursive|lcp|iterative]
///                     [--order dfs|reverse-dfs|shortest-first] [--stats F] GRAPH
///   stpaths topk --k K --source S --target T [--undirected] [--stats F] GRAPH
///   stpaths verify --source S --target T [--alpha A] [--undirected] GRAPH PATHS
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"List bounded-length simple st-paths", "stpaths"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string paths_file;
  std::string stats_file;
  std::string alpha_text;
  std::string engine_text;
  std::string order_text;
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t k = 0;
  bool undirected = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--source,-s", source, "source vertex (1-based)")->required();
    cmd->add_option("--target,-t", target, "target vertex (1-based)")->required();
    cmd->add_flag("--undirected,-u", undirected, "read each arc line as an undirected edge");
    cmd->add_option("graph", graph_file, "graph file")->required();
  };

  auto* enumerate = app.add_subcommand("enumerate", "list all paths of length at most alpha");
  add_common(enumerate);
  enumerate->add_option("--alpha,-a", alpha_text, "length bound")->required();
  enumerate->add_option("--engine", engine_text, "recursive, lcp or iterative")
      ->check(CLI::IsMember({"recursive", "lcp", "iterative"}));
  enumerate->add_option("--order", order_text, "dfs, reverse-dfs or shortest-first")
      ->check(CLI::IsMember({"dfs", "reverse-dfs", "shortest-first"}));
  enumerate->add_option("--stats", stats_file, "write a key = value run report");

  auto* topk = app.add_subcommand("topk", "list the K shortest paths");
  add_common(topk);
  topk->add_option("--k,-k", k, "number of paths")->required()->check(CLI::PositiveNumber);
  topk->add_option("--stats", stats_file, "write a key = value run report");

  auto* verify = app.add_subcommand("verify", "check path lines against a graph");
  add_common(verify);
  verify->add_option("paths", paths_file, "file of path lines")->required();
  verify->add_option("--alpha,-a", alpha_text, "length bound to check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::optional<Weight> alpha;
  if (!alpha_text.empty()) {
    try {
      alpha = Weight::parse(alpha_text);
    } catch (const std::exception&) {
      err << "error: invalid --alpha '" << alpha_text << "'\n";
      return exit_usage;
    }
  }

  Graph graph;
  try {
    graph = detail::load_graph(graph_file, undirected);
  } catch (const ParseError& e) {
    err << "error: " << graph_file << ": " << e.what() << '\n';
    return exit_parse;
  }
  if (source < 1 || source > graph.n() || target < 1 || target > graph.n()) {
    err << "error: vertex ids must be in 1.." << graph.n() << '\n';
    return exit_usage;
  }
  const Vertex s = source - 1;
  const Vertex t = target - 1;

  if (verify->parsed()) {
    std::ifstream in(paths_file);
    if (!in) {
      err << "error: cannot open '" << paths_file << "'\n";
      return exit_parse;
    }
    std::size_t line_no = 0;
    std::size_t checked = 0;
    std::vector<Path> seen;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      if (line.empty()) continue;
      try {
        auto [printed, path] = parse_path_line(line, line_no);
        std::string problem;
        if (path.source() != s || path.target() != t) problem = "wrong endpoints";
        else if (!is_simple(path)) problem = "repeats a vertex";
        else if (std::any_of(path.vertices.begin(), path.vertices.end(), [&](Vertex v) { return v >= graph.n(); }))
          problem = "vertex id out of range";
        if (problem.empty()) {
          try {
            const Weight actual = path_weight(graph, path);
            if (actual != printed) problem = "weight " + printed.to_string() + " != " + actual.to_string();
            else if (alpha && actual > *alpha) problem = "exceeds alpha";
          } catch (const std::logic_error&) {
            problem = "uses a missing arc";
          }
        }
        if (problem.empty() && std::find(seen.begin(), seen.end(), path) != seen.end()) problem = "duplicate path";
        if (!problem.empty()) {
          err << "line " << line_no << ": " << problem << '\n';
          return exit_verify_failed;
        }
        seen.push_back(std::move(path));
        ++checked;
      } catch (const ParseError& e) {
        err << "error: " << paths_file << ": " << e.what() << '\n';
        return exit_parse;
      }
    }
    out << "ok " << checked << " paths\n";
    return exit_ok;
  }

  // Non-negative working copy; weights printed are always the original ones.
  bool reweighted = false;
  Weight shift(0);
  Graph work = graph;
  if (graph.has_negative_weight()) {
    try {
      ReweightResult rw = johnson_reweight(graph, s, t);
      shift = rw.offset;
      work = std::move(rw.graph);
      reweighted = true;
      err << "note: negative weights present; using Johnson reweighting (offset " << shift << ")\n";
    } catch (const NegativeCycle& e) {
      err << "error: " << e.what() << '\n';
      return exit_negative_cycle;
    }
  }

  RunReport report;
  report.source = source;
  report.target = target;
  report.n = graph.n();
  report.m = graph.m();
  detail::PathPrinter printer(out, graph, reweighted);

  try {
    if (topk->parsed()) {
      report.mode = "topk";
      report.engine = detail::engine_name(detail::Engine::min_key);
      report.k = k;
      report.stats = k_shortest(work, s, t, k, printer);
    } else {
      std::string why;
      const auto engine = detail::resolve_engine(engine_text, order_text, undirected, why);
      if (!engine) {
        err << "error: " << why << '\n';
        return exit_usage;
      }
      report.mode = "enumerate";
      report.engine = detail::engine_name(*engine);
      report.alpha = alpha;
      const BoundedPathQuery query{work, s, t, *alpha + shift};
      switch (*engine) {
        case detail::Engine::recursive: report.stats = list_bounded_directed(query, printer); break;
        case detail::Engine::lcp: report.stats = list_bounded_undirected(query, printer); break;
        case detail::Engine::lifo: report.stats = list_iterative(query, ContainerKind::lifo, printer); break;
        case detail::Engine::min_key: report.stats = list_iterative(query, ContainerKind::min_key, printer); break;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  printer.finish(report);
  if (!detail::write_report(stats_file, report, err)) return exit_usage;
  return exit_ok;
}

}  // namespace stpaths

#endif  // STPATHS_CLI_HPP
