#ifndef STPATHS_LCP_HPP
#define STPATHS_LCP_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "stpaths/errors.hpp"
#include "stpaths/graph.hpp"
#include "stpaths/path.hpp"
#include "stpaths/shortest_paths.hpp"

namespace stpaths {

struct LcpResult {
  /// Longest common prefix of all alpha-bounded st-paths, starting at s.
  Path prefix;
  /// The first deviating edge (x, z) found, if the prefix stops short of t.
  std::optional<std::pair<Vertex, Vertex>> deviation;
  std::size_t sssp_runs = 0;
  /// Arc endpoints inspected while searching for a deviating edge.
  std::size_t arcs_scanned = 0;
};

/// Longest common prefix of the alpha-bounded simple st-paths of an
/// undirected graph with non-negative weights, in O(m) beyond two
/// shortest-path trees.
///
/// The prefix is a prefix of the s->t path v0..vq of the tree T_s rooted
/// at s. Walking that path, step i looks for an edge (x, z) entering the
/// subtree of v(i+1) with x = v(i) (other than the tree edge itself) or x
/// inside the subtree of another child of v(i), such that
/// d(s,x) + w(x,z) + d(z,t) <= alpha. The first such edge means the paths
/// split at v(i). Distances come from T_s and T_t of the full graph: x is
/// outside the subtree below the removed tree edge, and for undirected
/// graphs d(z,t) does not change either. Every vertex's incidence list is
/// scanned at most once over the whole walk.
///
/// Throws EmptyPathSet when d(s,t) > alpha.
inline LcpResult longest_common_prefix_detailed(const Graph& g, Vertex s, Vertex t,
                                                const Weight& alpha) {
  if (g.directed()) throw UsageError("longest_common_prefix requires an undirected graph");
  if (!g.vertex_alive(s) || !g.vertex_alive(t)) throw UsageError("longest_common_prefix: dead endpoint");

  LcpResult result;
  if (s == t) {
    if (alpha < Weight(0)) throw EmptyPathSet("no path within the length bound");
    result.prefix = Path(s);
    return result;
  }

  const ShortestPathTree from_s = sssp(g, s, Direction::forward, alpha);
  const ShortestPathTree to_t = sssp(g, t, Direction::reverse, alpha);
  result.sssp_runs = 2;
  if (!from_s.reachable(t) || from_s.distance(t) > alpha)
    throw EmptyPathSet("no path within the length bound");

  const std::vector<Vertex> spine = from_s.tree_path(t);

  // Scans x's incidence list for an edge into the subtree of `below`.
  auto deviates_from = [&](Vertex x, Vertex below, Vertex skip) -> std::optional<Vertex> {
    const Weight& head = from_s.distance(x);
    for (ArcId a : g.out_arcs(x)) {
      ++result.arcs_scanned;
      const Arc& arc = g.arc(a);
      const Vertex z = arc.to;
      if (z == skip || !from_s.reachable(z) || !to_t.reachable(z)) continue;
      if (!from_s.contains(below, z)) continue;
      if (head + arc.weight + to_t.distance(z) <= alpha) return z;
    }
    return std::nullopt;
  };

  std::size_t split = spine.size() - 1;
  for (std::size_t i = 0; i + 1 < spine.size() && !result.deviation; ++i) {
    const Vertex here = spine[i];
    const Vertex next = spine[i + 1];

    if (auto z = deviates_from(here, next, next)) {
      result.deviation.emplace(here, *z);
      split = i;
      break;
    }

    for (ArcId a : g.out_arcs(here)) {
      const Vertex w = g.arc(a).to;
      if (w == next || from_s.parent(w) != here) continue;
      for (Vertex x : from_s.subtree(w)) {
        if (auto z = deviates_from(x, next, no_vertex)) {
          result.deviation.emplace(x, *z);
          break;
        }
      }
      if (result.deviation) break;
    }
    if (result.deviation) split = i;
  }

  result.prefix = Path(s);
  for (std::size_t i = 1; i <= split; ++i) {
    const auto a = g.find_arc(spine[i - 1], spine[i]);
    result.prefix.extend(spine[i], g.arc(*a).weight);
  }
  return result;
}

/// Convenience wrapper returning only the prefix.
inline Path longest_common_prefix(const Graph& g, Vertex s, Vertex t, const Weight& alpha) {
  return longest_common_prefix_detailed(g, s, t, alpha).prefix;
}

}  // namespace stpaths

#endif  // STPATHS_LCP_HPP
