#ifndef STPATHS_GRAPH_HPP
#define STPATHS_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "stpaths/errors.hpp"
#include "stpaths/weight.hpp"

namespace stpaths {

using Vertex = std::size_t;
using ArcId = std::size_t;

inline constexpr Vertex no_vertex = std::numeric_limits<Vertex>::max();
inline constexpr ArcId no_arc = std::numeric_limits<ArcId>::max();

struct Arc {
  Vertex from;
  Vertex to;
  Weight weight;
  ArcId twin = no_arc;  // reverse copy of an undirected edge
};

/// Identifies one reversible mutation. Tokens must be restored LIFO.
struct UndoToken {
  std::size_t depth = 0;
  std::uint64_t serial = 0;
};

/// Position in the undo log; rolling back to it undoes everything after.
struct Checkpoint {
  std::size_t depth = 0;
};

/// Weighted graph over dense vertex ids 0..n-1 with lazy, reversible
/// deletion of vertices and arcs.
///
/// Every arc is listed in the out-adjacency of its tail and the
/// in-adjacency of its head, so the reverse graph is available without a
/// copy. An undirected edge {u,v} is stored as two twin arcs u->v and v->u
/// that are always removed together. Removal only flips alive flags, so
/// restoring a token brings back the exact adjacency state, including the
/// iteration order.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, bool directed)
      : directed_(directed), out_(n), in_(n), vertex_alive_(n, 1) {}

  bool directed() const { return directed_; }
  std::size_t n() const { return out_.size(); }
  /// Arcs for a directed graph, edges for an undirected one.
  std::size_t m() const { return directed_ ? arcs_.size() : arcs_.size() / 2; }
  std::size_t arc_count() const { return arcs_.size(); }

  bool all_unit_weights() const { return unit_weights_; }
  bool has_negative_weight() const { return negative_weights_; }

  /// Adds u->v (directed) or {u,v} (undirected). Returns the u->v arc.
  ArcId connect(Vertex u, Vertex v, Weight w) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
    if (!w.is_finite()) throw UsageError("arc weight must be finite");
    if (lookup_.contains(key(u, v)) || (!directed_ && lookup_.contains(key(v, u))))
      throw UsageError("parallel arc " + std::to_string(u) + "->" + std::to_string(v));
    const ArcId forward = push_arc(u, v, w);
    if (!directed_) {
      const ArcId backward = push_arc(v, u, w);
      arcs_[forward].twin = backward;
      arcs_[backward].twin = forward;
    }
    if (w != Weight(1)) unit_weights_ = false;
    if (w < Weight(0)) negative_weights_ = true;
    return forward;
  }

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  bool arc_alive(ArcId a) const { return arc_alive_[a] != 0; }
  bool vertex_alive(Vertex v) const { return v < n() && vertex_alive_[v] != 0; }

  /// Id of the arc u->v whether alive or not.
  std::optional<ArcId> find_arc(Vertex u, Vertex v) const {
    const auto it = lookup_.find(key(u, v));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Alive arcs leaving v (N+), in insertion order.
  auto out_arcs(Vertex v) const {
    return std::span<const ArcId>(out_[v]) |
           std::views::filter([this](ArcId a) { return arc_alive_[a] != 0; });
  }

  /// Alive arcs entering v (N-), in insertion order.
  auto in_arcs(Vertex v) const {
    return std::span<const ArcId>(in_[v]) |
           std::views::filter([this](ArcId a) { return arc_alive_[a] != 0; });
  }

  /// Out-adjacency including dead arcs.
  std::span<const ArcId> all_out_arcs(Vertex v) const { return out_[v]; }

  UndoToken remove_vertex(Vertex v) {
    if (!vertex_alive(v)) throw UsageError("remove_vertex: vertex " + std::to_string(v) + " is not alive");
    const UndoToken token = open_token();
    vertex_alive_[v] = 0;
    changes_.push_back({Change::Kind::vertex, v});
    for (ArcId a : out_[v]) kill_arc(a);
    for (ArcId a : in_[v]) kill_arc(a);
    return token;
  }

  /// Removes one arc; for undirected graphs its twin goes with it.
  UndoToken remove_arc(ArcId a) {
    if (a >= arcs_.size() || !arc_alive(a))
      throw UsageError("remove_arc: arc " + std::to_string(a) + " is not alive");
    const UndoToken token = open_token();
    kill_arc(a);
    if (arcs_[a].twin != no_arc) kill_arc(arcs_[a].twin);
    return token;
  }

  void restore(UndoToken token) {
    if (token.depth + 1 != token_begin_.size() || token_serials_.back() != token.serial)
      throw std::logic_error("restore: undo token out of LIFO order");
    pop_token();
  }

  Checkpoint mark() const { return {token_begin_.size()}; }

  void rollback(Checkpoint cp) {
    if (cp.depth > token_begin_.size()) throw std::logic_error("rollback: stale checkpoint");
    while (token_begin_.size() > cp.depth) pop_token();
  }

  /// Sorted (from, to, weight) triples of all alive arcs.
  std::vector<std::tuple<Vertex, Vertex, Weight>> alive_arc_set() const {
    std::vector<std::tuple<Vertex, Vertex, Weight>> result;
    for (ArcId a = 0; a < arcs_.size(); ++a)
      if (arc_alive(a)) result.emplace_back(arcs_[a].from, arcs_[a].to, arcs_[a].weight);
    std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) {
      if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
      return std::get<1>(x) < std::get<1>(y);
    });
    return result;
  }

  std::size_t undo_depth() const { return token_begin_.size(); }

 private:
  struct Change {
    enum class Kind : std::uint8_t { vertex, arc } kind;
    std::size_t id;
  };

  static std::uint64_t key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(u) << 32) ^ static_cast<std::uint64_t>(v);
  }

  void check_vertex(Vertex v) const {
    if (v >= n()) throw UsageError("vertex " + std::to_string(v) + " out of range");
  }

  ArcId push_arc(Vertex u, Vertex v, Weight w) {
    const ArcId id = arcs_.size();
    arcs_.push_back({u, v, w, no_arc});
    arc_alive_.push_back(1);
    out_[u].push_back(id);
    in_[v].push_back(id);
    lookup_.emplace(key(u, v), id);
    return id;
  }

  void kill_arc(ArcId a) {
    if (arc_alive_[a] == 0) return;
    arc_alive_[a] = 0;
    changes_.push_back({Change::Kind::arc, a});
  }

  UndoToken open_token() {
    token_begin_.push_back(changes_.size());
    token_serials_.push_back(++next_serial_);
    return {token_begin_.size() - 1, next_serial_};
  }

  void pop_token() {
    const std::size_t begin = token_begin_.back();
    while (changes_.size() > begin) {
      const Change c = changes_.back();
      changes_.pop_back();
      if (c.kind == Change::Kind::vertex)
        vertex_alive_[c.id] = 1;
      else
        arc_alive_[c.id] = 1;
    }
    token_begin_.pop_back();
    token_serials_.pop_back();
  }

  bool directed_ = true;
  bool unit_weights_ = true;
  bool negative_weights_ = false;
  std::vector<Arc> arcs_;
  std::vector<char> arc_alive_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
  std::vector<char> vertex_alive_;
  std::unordered_map<std::uint64_t, ArcId> lookup_;

  std::vector<Change> changes_;
  std::vector<std::size_t> token_begin_;
  std::vector<std::uint64_t> token_serials_;
  std::uint64_t next_serial_ = 0;
};

/// RAII scope that rolls the graph back to where it was on construction,
/// including when an exception unwinds through it.
class RollbackGuard {
 public:
  explicit RollbackGuard(Graph& g) : graph_(g), checkpoint_(g.mark()) {}
  RollbackGuard(const RollbackGuard&) = delete;
  RollbackGuard& operator=(const RollbackGuard&) = delete;
  ~RollbackGuard() { graph_.rollback(checkpoint_); }

 private:
  Graph& graph_;
  Checkpoint checkpoint_;
};

}  // namespace stpaths

#endif  // STPATHS_GRAPH_HPP
