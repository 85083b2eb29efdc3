#ifndef STPATHS_ENUM_UNDIRECTED_HPP
#define STPATHS_ENUM_UNDIRECTED_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "stpaths/enumeration.hpp"
#include "stpaths/graph.hpp"
#include "stpaths/lcp.hpp"
#include "stpaths/path.hpp"
#include "stpaths/shortest_paths.hpp"

namespace stpaths {

/// Lists every alpha-bounded simple st-path of an undirected graph.
///
/// Each call first jumps to the end u' of the longest common prefix of its
/// remaining path set, so a call either emits (u' = t) or branches into at
/// least two feasible children. That bounds internal calls by the number of
/// outputs, and each call costs O(m) plus at most three shortest-path runs:
/// two inside the prefix computation and one from t in the graph with the
/// prefix removed, used for the children's feasibility tests.
template <PathConsumer Emit>
EnumStats list_bounded_undirected(const BoundedPathQuery& q, Emit&& emit) {
  detail::check_query(q);
  Graph& g = q.graph;
  if (g.directed()) throw UsageError("list_bounded_undirected requires an undirected graph");
  detail::require_nonnegative(g);

  EnumStats stats;
  detail::StatsRecorder record(stats);
  RollbackGuard guard(g);
  const Vertex t = q.target;

  struct Child {
    Vertex v;
    Weight w;
  };
  struct Frame {
    Weight budget;  // left after the frame's prefix extension
    std::vector<Child> children;
    std::size_t next = 0;
    Checkpoint checkpoint;
    std::size_t prefix_size = 0;  // prefix to restore when the frame ends
    Weight prefix_weight;
    std::size_t emitted_at_entry = 0;
  };

  Path prefix(q.source);
  std::vector<Frame> stack;
  bool stop = false;

  auto emit_prefix = [&] {
    record.emitted();
    if (!detail::deliver(emit, prefix)) stop = true;
  };

  // Handles the call at the end of `prefix` with the given budget. Pushes a
  // frame when the call branches and returns true; the frame remembers the
  // caller's prefix state so popping it undoes the arc into u as well.
  auto enter = [&](const Weight& budget, bool is_root, std::size_t restore_size,
                   const Weight& restore_weight) {
    const Vertex u = prefix.target();
    if (u == t) {
      if (budget >= Weight(0)) emit_prefix();
      return false;
    }
    LcpResult lcp;
    try {
      lcp = longest_common_prefix_detailed(g, u, t, budget);
    } catch (const EmptyPathSet&) {
      record.shortest_path_run(2);
      if (is_root) return false;
      throw std::logic_error("list_bounded_undirected: infeasible child call");
    }
    record.shortest_path_run(lcp.sssp_runs);

    const std::size_t entry_size = prefix.vertices.size();
    const Weight entry_weight = prefix.weight;
    Frame frame;
    frame.prefix_size = restore_size;
    frame.prefix_weight = restore_weight;
    frame.emitted_at_entry = stats.paths_emitted;
    const Path& rho = lcp.prefix;
    for (std::size_t i = 1; i < rho.vertices.size(); ++i) prefix.vertices.push_back(rho.vertices[i]);
    prefix.weight += rho.weight;

    if (rho.target() == t) {
      emit_prefix();
      prefix.vertices.resize(entry_size);
      prefix.weight = entry_weight;
      return false;
    }

    const Vertex branch = rho.target();
    frame.budget = budget - rho.weight;
    frame.checkpoint = g.mark();
    std::vector<Child> candidates;
    for (ArcId a : g.out_arcs(branch)) candidates.push_back({g.arc(a).to, g.arc(a).weight});
    for (Vertex x : rho.vertices) g.remove_vertex(x);

    const ShortestPathTree to_target = sssp(g, t, Direction::reverse, frame.budget);
    record.shortest_path_run();
    for (const Child& c : candidates)
      if (to_target.reachable(c.v) && to_target.distance(c.v) + c.w <= frame.budget) frame.children.push_back(c);

    ++stats.internal_nodes;
    if (frame.children.size() < 2) ++stats.narrow_internal_nodes;
    stack.push_back(std::move(frame));
    record.occupancy(stack.size());
    return true;
  };

  enter(q.alpha, true, prefix.vertices.size(), prefix.weight);
  while (!stack.empty() && !stop) {
    Frame& top = stack.back();
    if (top.next == top.children.size()) {
      if (stats.paths_emitted == top.emitted_at_entry) ++stats.dead_calls;
      g.rollback(top.checkpoint);
      prefix.vertices.resize(top.prefix_size);
      prefix.weight = top.prefix_weight;
      stack.pop_back();
      continue;
    }
    const Child c = top.children[top.next++];
    const Weight child_budget = top.budget - c.w;
    const std::size_t size_before = prefix.vertices.size();
    const Weight weight_before = prefix.weight;
    prefix.extend(c.v, c.w);
    if (!enter(child_budget, false, size_before, weight_before)) {
      prefix.vertices.resize(size_before);
      prefix.weight = weight_before;
    }
  }

  stats.stopped_early = stop && !stack.empty();
  record.finish();
  return stats;
}

}  // namespace stpaths

#endif  // STPATHS_ENUM_UNDIRECTED_HPP
