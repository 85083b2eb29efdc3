#ifndef STPATHS_UNIFIED_TRAVERSAL_HPP
#define STPATHS_UNIFIED_TRAVERSAL_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "stpaths/enumeration.hpp"
#include "stpaths/graph.hpp"
#include "stpaths/path.hpp"
#include "stpaths/shortest_paths.hpp"

namespace stpaths {

/// One node of the partition tree: the paths that start with `prefix` and
/// continue to t inside G minus the prefix's non-terminal vertices, within
/// `budget`. The residual graph is rebuilt from the prefix when popped.
struct Frame {
  Path prefix;
  Weight budget;
  /// w(prefix) + d(u, t) in the frame's residual graph.
  Weight key;
  std::uint64_t sequence = 0;

  Vertex endpoint() const { return prefix.target(); }
};

template <class C>
concept FrameContainer = requires(C c, Frame f) {
  c.push(std::move(f));
  { c.pop() } -> std::same_as<Frame>;
  { c.empty() } -> std::convertible_to<bool>;
  { c.size() } -> std::convertible_to<std::size_t>;
};

/// Stack: depth-first traversal, children in reverse adjacency order.
class LifoContainer {
 public:
  void push(Frame f) { items_.push_back(std::move(f)); }
  Frame pop() {
    Frame f = std::move(items_.back());
    items_.pop_back();
    return f;
  }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<Frame> items_;
};

/// Binary heap on (key, push sequence): best-first traversal, FIFO among
/// equal keys.
class MinKeyContainer {
 public:
  void push(Frame f) {
    heap_.push_back(std::move(f));
    std::push_heap(heap_.begin(), heap_.end(), Later{});
  }
  Frame pop() {
    std::pop_heap(heap_.begin(), heap_.end(), Later{});
    Frame f = std::move(heap_.back());
    heap_.pop_back();
    return f;
  }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Later {
    bool operator()(const Frame& a, const Frame& b) const {
      if (a.key != b.key) return a.key > b.key;
      return a.sequence > b.sequence;
    }
  };
  std::vector<Frame> heap_;
};

enum class ContainerKind { lifo, min_key };

/// Generic traversal of the partition tree with a caller-chosen container.
/// Every tree node is pushed and popped exactly once; with a stack the
/// output is the reverse of list_bounded_directed, with MinKeyContainer it
/// is by non-decreasing weight. alpha may be infinite.
template <FrameContainer Container, PathConsumer Emit>
EnumStats traverse_partition_tree(const BoundedPathQuery& q, Container& queue, Emit&& emit) {
  detail::check_endpoints(q);
  Graph& g = q.graph;
  detail::require_nonnegative(g);

  EnumStats stats;
  detail::StatsRecorder record(stats);
  RollbackGuard guard(g);
  const Vertex s = q.source;
  const Vertex t = q.target;
  std::uint64_t sequence = 0;

  if (s == t) {
    if (q.alpha >= Weight(0)) queue.push(Frame{Path(s), q.alpha, Weight(0), sequence++});
  } else {
    const ShortestPathTree gate = sssp(g, t, Direction::reverse, q.alpha);
    record.shortest_path_run();
    if (gate.reachable(s) && gate.distance(s) <= q.alpha) queue.push(Frame{Path(s), q.alpha, gate.distance(s), sequence++});
  }
  record.occupancy(queue.size());

  bool have_popped = false;
  Weight last_key;
  while (!queue.empty()) {
    Frame frame = queue.pop();
    if (have_popped && frame.key < last_key) ++stats.key_order_violations;
    last_key = frame.key;
    have_popped = true;

    const Vertex u = frame.endpoint();
    if (u == t) {
      record.emitted();
      if (!detail::deliver(emit, frame.prefix)) {
        stats.stopped_early = !queue.empty();
        break;
      }
      continue;
    }

    RollbackGuard residual(g);
    for (std::size_t i = 0; i + 1 < frame.prefix.vertices.size(); ++i)
      g.remove_vertex(frame.prefix.vertices[i]);
    std::vector<std::pair<Vertex, Weight>> candidates;
    for (ArcId a : g.out_arcs(u)) candidates.emplace_back(g.arc(a).to, g.arc(a).weight);
    g.remove_vertex(u);

    const ShortestPathTree to_target = sssp(g, t, Direction::reverse, frame.budget);
    record.shortest_path_run();
    std::size_t pushed = 0;
    for (const auto& [v, w] : candidates) {
      const Weight& dist = to_target.distance(v);
      if (!dist.is_finite() || dist + w > frame.budget) continue;
      Frame child{frame.prefix, frame.budget - w, Weight(0), sequence++};
      child.prefix.extend(v, w);
      child.key = child.prefix.weight + dist;
      queue.push(std::move(child));
      ++pushed;
    }
    ++stats.internal_nodes;
    if (pushed < 2) ++stats.narrow_internal_nodes;
    if (pushed == 0) ++stats.dead_calls;
    record.occupancy(queue.size());
  }

  record.finish();
  return stats;
}

/// list_iterative: the traversal with a stack (kind = lifo) or a priority
/// queue keyed by w(prefix) + d(u,t) (kind = min_key).
template <PathConsumer Emit>
EnumStats list_iterative(const BoundedPathQuery& q, ContainerKind kind, Emit&& emit) {
  detail::check_query(q);
  if (kind == ContainerKind::lifo) {
    LifoContainer stack;
    return traverse_partition_tree(q, stack, emit);
  }
  MinKeyContainer heap;
  return traverse_partition_tree(q, heap, emit);
}

/// The K shortest simple st-paths by non-decreasing weight (fewer if fewer
/// exist): an unbounded best-first traversal cut off after K outputs.
template <PathConsumer Emit>
EnumStats k_shortest(Graph& g, Vertex s, Vertex t, std::size_t k, Emit&& emit) {
  if (k == 0) throw UsageError("k_shortest: K must be positive");
  std::size_t delivered = 0;
  bool keep_going = true;
  auto limited = [&](const Path& p) {
    keep_going = detail::deliver(emit, p);
    return keep_going && ++delivered < k;
  };
  MinKeyContainer heap;
  return traverse_partition_tree(BoundedPathQuery{g, s, t, Weight::infinity()}, heap, limited);
}

}  // namespace stpaths

#endif  // STPATHS_UNIFIED_TRAVERSAL_HPP
