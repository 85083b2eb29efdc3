#ifndef STPATHS_ENUMERATION_HPP
#define STPATHS_ENUMERATION_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>

#include "stpaths/errors.hpp"
#include "stpaths/graph.hpp"
#include "stpaths/path.hpp"
#include "stpaths/weight.hpp"

namespace stpaths {

/// List all simple source->target paths of weight at most alpha in graph.
/// The graph is mutated during enumeration and restored before returning.
struct BoundedPathQuery {
  Graph& graph;
  Vertex source;
  Vertex target;
  Weight alpha;
};

/// Counters that witness the cost bounds of an enumeration run.
struct EnumStats {
  std::size_t paths_emitted = 0;
  std::size_t sssp_total = 0;
  /// Largest number of shortest-path computations before the first
  /// emission, between two emissions, or after the last one.
  std::size_t sssp_max_between_emissions = 0;
  /// Peak frame-stack depth (recursive engines) or container size.
  std::size_t container_peak = 0;
  std::size_t internal_nodes = 0;
  std::size_t leaves = 0;
  /// Recursion nodes whose subtree emitted nothing. Always 0 when the
  /// feasibility tests are exact.
  std::size_t dead_calls = 0;
  /// Internal nodes with fewer than two children.
  std::size_t narrow_internal_nodes = 0;
  /// Pops whose key is below the previous popped key (priority order only).
  std::size_t key_order_violations = 0;
  /// The consumer asked to stop before the tree was exhausted.
  bool stopped_early = false;
};

/// A path consumer is called once per emitted path. If it returns
/// something convertible to bool, false stops the enumeration.
template <class F>
concept PathConsumer = std::invocable<F&, const Path&>;

namespace detail {

template <class F>
bool deliver(F& consumer, const Path& p) {
  if constexpr (std::is_convertible_v<std::invoke_result_t<F&, const Path&>, bool>) {
    return static_cast<bool>(std::invoke(consumer, p));
  } else {
    std::invoke(consumer, p);
    return true;
  }
}

class StatsRecorder {
 public:
  explicit StatsRecorder(EnumStats& stats) : stats_(stats) {}

  void shortest_path_run(std::size_t count = 1) {
    stats_.sssp_total += count;
    since_emission_ += count;
  }

  void emitted() {
    ++stats_.paths_emitted;
    ++stats_.leaves;
    close_gap();
  }

  void occupancy(std::size_t size) { stats_.container_peak = std::max(stats_.container_peak, size); }

  void finish() { close_gap(); }

 private:
  void close_gap() {
    stats_.sssp_max_between_emissions = std::max(stats_.sssp_max_between_emissions, since_emission_);
    since_emission_ = 0;
  }

  EnumStats& stats_;
  std::size_t since_emission_ = 0;
};

inline void check_endpoints(const BoundedPathQuery& q) {
  if (!q.graph.vertex_alive(q.source))
    throw UsageError("source vertex " + std::to_string(q.source) + " is not alive");
  if (!q.graph.vertex_alive(q.target))
    throw UsageError("target vertex " + std::to_string(q.target) + " is not alive");
}

inline void check_query(const BoundedPathQuery& q) {
  check_endpoints(q);
  if (!q.alpha.is_finite()) throw UsageError("length bound must be finite");
}

inline void require_nonnegative(const Graph& g) {
  if (!g.has_negative_weight()) return;
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (g.arc_alive(a) && g.arc(a).weight < Weight(0))
      throw ContractViolation("negative arc weight; apply johnson_reweight first");
}

}  // namespace detail
}  // namespace stpaths

#endif  // STPATHS_ENUMERATION_HPP
