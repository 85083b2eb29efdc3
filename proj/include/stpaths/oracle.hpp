#ifndef STPATHS_ORACLE_HPP
#define STPATHS_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "stpaths/graph.hpp"
#include "stpaths/path.hpp"
#include "stpaths/weight.hpp"

namespace stpaths {

// Exhaustive reference enumerators for small graphs. No pruning beyond
// simplicity: every simple path from s is walked.

namespace detail {

template <class Visit>
void walk_simple_paths(const Graph& g, Vertex s, Visit&& visit) {
  std::vector<char> on_path(g.n(), 0);
  Path current(s);
  on_path[s] = 1;
  auto dfs = [&](auto&& self, Vertex u) -> void {
    if (!visit(current)) return;
    for (ArcId a : g.out_arcs(u)) {
      const Arc& arc = g.arc(a);
      if (on_path[arc.to]) continue;
      on_path[arc.to] = 1;
      current.extend(arc.to, arc.weight);
      self(self, arc.to);
      current.vertices.pop_back();
      current.weight -= arc.weight;
      on_path[arc.to] = 0;
    }
  };
  dfs(dfs, s);
}

}  // namespace detail

/// All simple s->t paths of weight <= alpha, sorted by vertex sequence.
inline std::vector<Path> brute_force_paths(const Graph& g, Vertex s, Vertex t, const Weight& alpha) {
  std::vector<Path> found;
  detail::walk_simple_paths(g, s, [&](const Path& p) {
    if (p.target() != t) return true;
    if (p.weight <= alpha) found.push_back(p);
    return false;
  });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

/// Minimum weight over all simple s->v paths, per v (infinity if none).
inline std::vector<Weight> brute_force_distances(const Graph& g, Vertex s) {
  std::vector<Weight> best(g.n(), Weight::infinity());
  detail::walk_simple_paths(g, s, [&](const Path& p) {
    if (p.weight < best[p.target()]) best[p.target()] = p.weight;
    return true;
  });
  return best;
}

/// Element-wise longest common prefix of a non-empty set of paths.
inline std::vector<Vertex> common_prefix(const std::vector<Path>& paths) {
  std::vector<Vertex> prefix = paths.front().vertices;
  for (const Path& p : paths) {
    std::size_t k = 0;
    while (k < prefix.size() && k < p.vertices.size() && prefix[k] == p.vertices[k]) ++k;
    prefix.resize(k);
  }
  return prefix;
}

}  // namespace stpaths

#endif  // STPATHS_ORACLE_HPP
