#ifndef STPATHS_SHORTEST_PATHS_HPP
#define STPATHS_SHORTEST_PATHS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stpaths/errors.hpp"
#include "stpaths/graph.hpp"
#include "stpaths/weight.hpp"

namespace stpaths {

/// forward: distances from the root along out-arcs.
/// reverse: distances to the root, i.e. a search in the reverse graph.
enum class Direction { forward, reverse };

/// Shortest-path tree with an Euler-tour index for O(1) subtree tests.
///
/// For a reverse tree the parent of v is the next vertex on a shortest
/// v -> root path. Unreachable vertices have an infinite distance and take
/// no part in the tree.
class ShortestPathTree {
 public:
  Vertex root() const { return root_; }
  Direction direction() const { return direction_; }
  std::size_t size() const { return dist_.size(); }

  const Weight& distance(Vertex v) const { return dist_[v]; }
  bool reachable(Vertex v) const { return dist_[v].is_finite(); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  ArcId parent_arc(Vertex v) const { return parent_arc_[v]; }

  std::size_t enter(Vertex v) const { return enter_[v]; }
  std::size_t exit(Vertex v) const { return exit_[v]; }

  /// True iff z lies in the subtree rooted at v.
  bool contains(Vertex v, Vertex z) const {
    if (!reachable(v) || !reachable(z))
      throw UsageError("subtree query on unreachable vertex");
    return enter_[v] <= enter_[z] && enter_[z] < exit_[v];
  }

  /// Vertices of the subtree rooted at v in preorder.
  std::span<const Vertex> subtree(Vertex v) const {
    if (!reachable(v)) throw UsageError("subtree query on unreachable vertex");
    return std::span<const Vertex>(preorder_).subspan(enter_[v], exit_[v] - enter_[v]);
  }

  /// Tree path between the root and v, listed from the root for a forward
  /// tree and from v for a reverse tree, so it always follows arc direction.
  std::vector<Vertex> tree_path(Vertex v) const {
    if (!reachable(v)) throw UsageError("tree_path: vertex is unreachable");
    std::vector<Vertex> path;
    for (Vertex x = v; x != no_vertex; x = parent_[x]) path.push_back(x);
    if (direction_ == Direction::forward) std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  friend ShortestPathTree sssp(const Graph&, Vertex, Direction, const Weight&);

  void build_euler_index() {
    const std::size_t n = dist_.size();
    std::vector<std::size_t> child_begin(n + 1, 0);
    for (Vertex v = 0; v < n; ++v)
      if (parent_[v] != no_vertex) ++child_begin[parent_[v] + 1];
    for (std::size_t i = 0; i < n; ++i) child_begin[i + 1] += child_begin[i];
    std::vector<Vertex> children(child_begin[n]);
    std::vector<std::size_t> fill(child_begin.begin(), child_begin.end() - 1);
    for (Vertex v = 0; v < n; ++v)
      if (parent_[v] != no_vertex) children[fill[parent_[v]]++] = v;

    enter_.assign(n, 0);
    exit_.assign(n, 0);
    preorder_.clear();
    std::vector<std::pair<Vertex, std::size_t>> stack{{root_, child_begin[root_]}};
    enter_[root_] = preorder_.size();
    preorder_.push_back(root_);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < child_begin[v + 1]) {
        const Vertex c = children[next++];
        enter_[c] = preorder_.size();
        preorder_.push_back(c);
        stack.emplace_back(c, child_begin[c]);
      } else {
        exit_[v] = preorder_.size();
        stack.pop_back();
      }
    }
  }

  Vertex root_ = no_vertex;
  Direction direction_ = Direction::forward;
  std::vector<Weight> dist_;
  std::vector<Vertex> parent_;
  std::vector<ArcId> parent_arc_;
  std::vector<std::size_t> enter_;
  std::vector<std::size_t> exit_;
  std::vector<Vertex> preorder_;
};

/// Single-source shortest paths over the alive part of g.
///
/// Uses BFS when every arc of g has weight exactly 1, Dijkstra otherwise
/// (ties broken by vertex id). Vertices farther than `cutoff` are reported
/// unreachable; the tree restricted to the remaining vertices is the same as
/// without a cutoff.
inline ShortestPathTree sssp(const Graph& g, Vertex root, Direction direction,
                             const Weight& cutoff = Weight::infinity()) {
  if (!g.vertex_alive(root)) throw UsageError("sssp: root " + std::to_string(root) + " is not alive");
  if (g.has_negative_weight()) {
    for (ArcId a = 0; a < g.arc_count(); ++a)
      if (g.arc_alive(a) && g.arc(a).weight < Weight(0))
        throw ContractViolation("sssp: negative arc weight; reweight first");
  }

  const std::size_t n = g.n();
  ShortestPathTree tree;
  tree.root_ = root;
  tree.direction_ = direction;
  tree.dist_.assign(n, Weight::infinity());
  tree.parent_.assign(n, no_vertex);
  tree.parent_arc_.assign(n, no_arc);

  const bool forward = direction == Direction::forward;
  auto neighbour = [&](ArcId a) { return forward ? g.arc(a).to : g.arc(a).from; };

  if (g.all_unit_weights()) {
    std::vector<Vertex> queue{root};
    tree.dist_[root] = Weight(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      const Weight next = tree.dist_[v] + Weight(1);
      if (next > cutoff) continue;
      auto relax = [&](ArcId a) {
        const Vertex x = neighbour(a);
        if (tree.dist_[x].is_finite()) return;
        tree.dist_[x] = next;
        tree.parent_[x] = v;
        tree.parent_arc_[x] = a;
        queue.push_back(x);
      };
      if (forward)
        for (ArcId a : g.out_arcs(v)) relax(a);
      else
        for (ArcId a : g.in_arcs(v)) relax(a);
    }
  } else {
    using Entry = std::pair<Weight, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<Weight> tentative(n, Weight::infinity());
    std::vector<char> settled(n, 0);
    tentative[root] = Weight(0);
    heap.emplace(Weight(0), root);
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (settled[v] || d != tentative[v]) continue;
      if (d > cutoff && v != root) break;
      settled[v] = 1;
      tree.dist_[v] = d;
      auto relax = [&](ArcId a) {
        const Vertex x = neighbour(a);
        if (settled[x]) return;
        const Weight candidate = d + g.arc(a).weight;
        if (candidate < tentative[x]) {
          tentative[x] = candidate;
          tree.parent_[x] = v;
          tree.parent_arc_[x] = a;
          heap.emplace(candidate, x);
        }
      };
      if (forward)
        for (ArcId a : g.out_arcs(v)) relax(a);
      else
        for (ArcId a : g.in_arcs(v)) relax(a);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!settled[v]) {
        tree.parent_[v] = no_vertex;
        tree.parent_arc_[v] = no_arc;
      }
    }
  }

  tree.build_euler_index();
  return tree;
}

/// subtree_contains(T, v, z): z is in the subtree of T rooted at v.
inline bool subtree_contains(const ShortestPathTree& tree, Vertex v, Vertex z) {
  return tree.contains(v, z);
}

/// Johnson potentials for a graph with negative arcs but no negative cycle.
struct ReweightResult {
  /// h(v); reweighted arc weight is w(u,v) + h(u) - h(v) >= 0.
  std::vector<Weight> potential;
  /// Copy of the input graph (alive arcs, same order) carrying w'.
  Graph graph;
  /// For every st-path pi: w'(pi) = w(pi) + offset, offset = h(s) - h(t).
  Weight offset;
};

/// Bellman-Ford potentials from a virtual source q.
///
/// q is joined to s by a 0-weight arc and to every other vertex by an arc of
/// weight K (the sum of all |w|), so that h(v) = d(s,v) wherever s reaches v
/// and every vertex still gets a finite potential. Graphs without negative
/// arcs get h = 0. Throws NegativeCycle when a negative cycle exists.
inline ReweightResult johnson_reweight(const Graph& g, Vertex s, Vertex t) {
  if (!g.vertex_alive(s) || !g.vertex_alive(t)) throw UsageError("johnson_reweight: dead endpoint");
  const std::size_t n = g.n();

  std::vector<ArcId> alive;
  bool negative = false;
  Weight total_abs(0);
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (!g.arc_alive(a)) continue;
    alive.push_back(a);
    const Weight& w = g.arc(a).weight;
    if (w < Weight(0)) {
      negative = true;
      total_abs += -w;
    } else {
      total_abs += w;
    }
  }

  std::vector<Weight> h(n, Weight(0));
  if (negative) {
    std::vector<Vertex> pred(n, no_vertex);
    for (Vertex v = 0; v < n; ++v) h[v] = (v == s) ? Weight(0) : total_abs;
    // The augmented graph has n + 1 vertices, so n passes settle it.
    Vertex last_relaxed = no_vertex;
    for (std::size_t pass = 0; pass <= n; ++pass) {
      last_relaxed = no_vertex;
      for (ArcId a : alive) {
        const Arc& arc = g.arc(a);
        const Weight candidate = h[arc.from] + arc.weight;
        if (candidate < h[arc.to]) {
          h[arc.to] = candidate;
          pred[arc.to] = arc.from;
          last_relaxed = arc.to;
        }
      }
      if (last_relaxed == no_vertex) break;
    }
    if (last_relaxed != no_vertex) {
      Vertex v = last_relaxed;
      for (std::size_t i = 0; i < n && pred[v] != no_vertex; ++i) v = pred[v];
      throw NegativeCycle(v);
    }
  }

  ReweightResult result{h, Graph(n, g.directed()), h[s] - h[t]};
  for (ArcId a : alive) {
    const Arc& arc = g.arc(a);
    if (!g.directed() && arc.twin < a) continue;
    result.graph.connect(arc.from, arc.to, arc.weight + h[arc.from] - h[arc.to]);
  }
  return result;
}

}  // namespace stpaths

#endif  // STPATHS_SHORTEST_PATHS_HPP
