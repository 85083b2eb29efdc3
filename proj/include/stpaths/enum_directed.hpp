#ifndef STPATHS_ENUM_DIRECTED_HPP
#define STPATHS_ENUM_DIRECTED_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "stpaths/enumeration.hpp"
#include "stpaths/graph.hpp"
#include "stpaths/path.hpp"
#include "stpaths/shortest_paths.hpp"

namespace stpaths {

/// Lists every simple st-path of weight <= alpha, each exactly once.
///
/// Binary partition on the first arc: the paths from u split by the
/// successor v, and the part through v is explored only if
/// d(v,t) <= budget - w(u,v) in G - u, so every explored call ends in at
/// least one emitted path. One reverse shortest-path tree from t is
/// computed per internal call. Children are visited in adjacency order,
/// which fixes the output order. The recursion runs on an explicit frame
/// stack; each frame keeps only its feasible children and one undo token,
/// giving O(m + n) extra memory.
template <PathConsumer Emit>
EnumStats list_bounded_directed(const BoundedPathQuery& q, Emit&& emit) {
  detail::check_query(q);
  Graph& g = q.graph;
  detail::require_nonnegative(g);

  EnumStats stats;
  detail::StatsRecorder record(stats);
  RollbackGuard guard(g);
  const Vertex t = q.target;

  if (q.source == t) {
    if (q.alpha >= Weight(0)) {
      record.occupancy(1);
      record.emitted();
      detail::deliver(emit, Path(t));
    }
    record.finish();
    return stats;
  }

  {
    const ShortestPathTree gate = sssp(g, t, Direction::reverse, q.alpha);
    record.shortest_path_run();
    if (gate.distance(q.source) > q.alpha) {
      record.finish();
      return stats;
    }
  }

  struct Child {
    Vertex v;
    Weight w;
  };
  struct Frame {
    Weight budget;
    std::vector<Child> children;
    std::size_t next = 0;
    UndoToken token;
    std::size_t emitted_at_entry = 0;
  };

  Path prefix(q.source);
  std::vector<Frame> stack;
  bool stop = false;

  // Either emits (u == t) or pushes a frame for u. Returns true on push.
  auto enter = [&](Vertex u, const Weight& budget) {
    if (u == t) {
      record.emitted();
      if (!detail::deliver(emit, prefix)) stop = true;
      return false;
    }
    Frame frame{budget, {}, 0, {}, stats.paths_emitted};
    std::vector<Child> candidates;
    for (ArcId a : g.out_arcs(u)) candidates.push_back({g.arc(a).to, g.arc(a).weight});
    frame.token = g.remove_vertex(u);
    const ShortestPathTree to_target = sssp(g, t, Direction::reverse, budget);
    record.shortest_path_run();
    for (const Child& c : candidates)
      if (to_target.reachable(c.v) && to_target.distance(c.v) + c.w <= budget) frame.children.push_back(c);

    ++stats.internal_nodes;
    if (frame.children.size() < 2) ++stats.narrow_internal_nodes;
    stack.push_back(std::move(frame));
    record.occupancy(stack.size());
    return true;
  };

  enter(q.source, q.alpha);
  while (!stack.empty() && !stop) {
    Frame& top = stack.back();
    if (top.next == top.children.size()) {
      if (stats.paths_emitted == top.emitted_at_entry) ++stats.dead_calls;
      g.restore(top.token);
      stack.pop_back();
      if (!stack.empty()) {
        const Child& arrived = stack.back().children[stack.back().next - 1];
        prefix.vertices.pop_back();
        prefix.weight -= arrived.w;
      }
      continue;
    }
    const Child c = top.children[top.next++];
    const Weight child_budget = top.budget - c.w;
    prefix.extend(c.v, c.w);
    if (!enter(c.v, child_budget)) {
      prefix.vertices.pop_back();
      prefix.weight -= c.w;
    }
  }

  stats.stopped_early = stop && !stack.empty();
  record.finish();
  return stats;
}

}  // namespace stpaths

#endif  // STPATHS_ENUM_DIRECTED_HPP
