#ifndef STPATHS_IO_HPP
#define STPATHS_IO_HPP

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stpaths/enumeration.hpp"
#include "stpaths/errors.hpp"
#include "stpaths/graph.hpp"
#include "stpaths/path.hpp"
#include "stpaths/weight.hpp"

namespace stpaths {

// Text format (shortest-path benchmark style):
//   c <comment>
//   p sp <n> <m>
//   a <u> <v> <w>      1-based ids, w an integer, decimal or num/den
// With `undirected`, each arc line is an edge.

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

inline std::size_t parse_count(const std::string& text, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(line, std::string("bad ") + what + " '" + text + "'");
  return value;
}

}  // namespace detail

inline Graph parse_graph(std::istream& in, bool undirected) {
  std::optional<Graph> graph;
  std::size_t declared_arcs = 0;
  std::size_t seen_arcs = 0;
  std::size_t line_no = 0;

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto words = detail::split_words(line);
    if (words.empty() || words[0] == "c") continue;

    if (words[0] == "p") {
      if (graph) throw ParseError(line_no, "duplicate problem line");
      if (words.size() != 4 || words[1] != "sp") throw ParseError(line_no, "expected 'p sp <n> <m>'");
      const std::size_t n = detail::parse_count(words[2], line_no, "vertex count");
      declared_arcs = detail::parse_count(words[3], line_no, "arc count");
      graph.emplace(n, !undirected);
      continue;
    }

    if (words[0] == "a") {
      if (!graph) throw ParseError(line_no, "arc before problem line");
      if (words.size() != 4) throw ParseError(line_no, "expected 'a <u> <v> <w>'");
      const std::size_t u = detail::parse_count(words[1], line_no, "vertex id");
      const std::size_t v = detail::parse_count(words[2], line_no, "vertex id");
      if (u < 1 || u > graph->n() || v < 1 || v > graph->n())
        throw ParseError(line_no, "vertex id out of range");
      Weight w;
      try {
        w = Weight::parse(words[3]);
      } catch (const std::exception&) {
        throw ParseError(line_no, "non-numeric weight '" + words[3] + "'");
      }
      if (!w.is_finite()) throw ParseError(line_no, "infinite weight");
      if (++seen_arcs > declared_arcs) throw ParseError(line_no, "more arcs than declared");
      try {
        graph->connect(u - 1, v - 1, w);
      } catch (const UsageError&) {
        if (u == v) throw ParseError(line_no, "self-loop");
        throw ParseError(line_no, "duplicate arc");
      }
      continue;
    }

    throw ParseError(line_no, "unknown line type '" + words[0] + "'");
  }

  if (!graph) throw ParseError(line_no + 1, "missing problem line");
  if (seen_arcs != declared_arcs)
    throw ParseError(line_no + 1, "expected " + std::to_string(declared_arcs) + " arcs, found " +
                                      std::to_string(seen_arcs));
  return std::move(*graph);
}

inline Graph parse_graph(const std::string& text, bool undirected) {
  std::istringstream in(text);
  return parse_graph(in, undirected);
}

/// Alive arcs (one line per undirected edge) in the input format.
inline std::string serialize_graph(const Graph& g) {
  std::vector<const Arc*> lines;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (!g.arc_alive(a)) continue;
    if (!g.directed() && g.arc(a).twin < a) continue;
    lines.push_back(&g.arc(a));
  }
  std::ostringstream out;
  out << "p sp " << g.n() << ' ' << lines.size() << '\n';
  for (const Arc* arc : lines) out << "a " << arc->from + 1 << ' ' << arc->to + 1 << ' ' << arc->weight << '\n';
  return out.str();
}

/// "<weight>\t<v0> <v1> ... <vk>" with 1-based vertex ids.
inline std::string format_path_line(const Path& p, const Weight& weight) {
  std::string line = weight.to_string();
  line += '\t';
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(p.vertices[i] + 1);
  }
  return line;
}

inline std::string format_path_line(const Path& p) { return format_path_line(p, p.weight); }

/// Inverse of format_path_line: the printed weight and the 0-based path.
inline std::pair<Weight, Path> parse_path_line(const std::string& line, std::size_t line_no) {
  const auto tab = line.find('\t');
  if (tab == std::string::npos) throw ParseError(line_no, "missing tab after weight");
  Weight printed;
  try {
    printed = Weight::parse(line.substr(0, tab));
  } catch (const std::exception&) {
    throw ParseError(line_no, "bad weight");
  }
  Path p;
  for (const auto& word : detail::split_words(line.substr(tab + 1))) {
    const std::size_t id = detail::parse_count(word, line_no, "vertex id");
    if (id == 0) throw ParseError(line_no, "vertex ids are 1-based");
    p.vertices.push_back(id - 1);
  }
  if (p.vertices.empty()) throw ParseError(line_no, "empty vertex list");
  return {printed, std::move(p)};
}

/// Machine-readable summary of one CLI run.
struct RunReport {
  std::string mode;
  std::string engine;
  Vertex source = 0;  // 1-based, as given
  Vertex target = 0;
  std::optional<Weight> alpha;
  std::optional<std::size_t> k;
  std::size_t n = 0;
  std::size_t m = 0;
  EnumStats stats;
  double wall_total_ms = 0;
  double wall_max_gap_ms = 0;

  void write(std::ostream& os) const {
    os << "mode = " << mode << '\n';
    os << "engine = " << engine << '\n';
    os << "source = " << source << '\n';
    os << "target = " << target << '\n';
    if (alpha) os << "alpha = " << *alpha << '\n';
    if (k) os << "k = " << *k << '\n';
    os << "n = " << n << '\n';
    os << "m = " << m << '\n';
    os << "gamma = " << stats.paths_emitted << '\n';
    os << "sssp_total = " << stats.sssp_total << '\n';
    os << "sssp_max_between_emissions = " << stats.sssp_max_between_emissions << '\n';
    os << "container_peak = " << stats.container_peak << '\n';
    os << "internal_nodes = " << stats.internal_nodes << '\n';
    os << "leaves = " << stats.leaves << '\n';
    os << "wall_total_ms = " << wall_total_ms << '\n';
    os << "wall_max_gap_ms = " << wall_max_gap_ms << '\n';
  }
};

}  // namespace stpaths

#endif  // STPATHS_IO_HPP
