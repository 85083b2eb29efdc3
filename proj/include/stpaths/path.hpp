#ifndef STPATHS_PATH_HPP
#define STPATHS_PATH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "stpaths/graph.hpp"
#include "stpaths/weight.hpp"

namespace stpaths {

/// A path given by its vertex sequence (vertices.front() is the start, so
/// the empty path still knows where it is) with its cached total weight.
/// Graphs have no parallel arcs, so the vertex sequence fixes the arcs.
struct Path {
  std::vector<Vertex> vertices;
  Weight weight;

  Path() = default;
  explicit Path(Vertex start) : vertices{start} {}
  Path(std::vector<Vertex> vs, Weight w) : vertices(std::move(vs)), weight(w) {}

  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  /// Number of arcs.
  std::size_t arc_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  void extend(Vertex v, Weight w) {
    vertices.push_back(v);
    weight += w;
  }

  friend bool operator==(const Path& a, const Path& b) { return a.vertices == b.vertices; }
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    return a.vertices <=> b.vertices;
  }

  friend std::ostream& operator<<(std::ostream& os, const Path& p) {
    os << '[';
    for (std::size_t i = 0; i < p.vertices.size(); ++i) os << (i ? " " : "") << p.vertices[i];
    return os << "] w=" << p.weight;
  }
};

/// Exact sum of the arc weights along p; throws std::logic_error if some
/// arc is missing or not alive.
inline Weight path_weight(const Graph& g, const Path& p) {
  Weight total(0);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const auto a = g.find_arc(p.vertices[i], p.vertices[i + 1]);
    if (!a || !g.arc_alive(*a)) throw std::logic_error("path_weight: arc not present in graph");
    total += g.arc(*a).weight;
  }
  return total;
}

inline bool is_simple(const Path& p) {
  std::vector<Vertex> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace stpaths

#endif  // STPATHS_PATH_HPP
