#ifndef STPATHS_TESTS_FIXTURES_HPP
#define STPATHS_TESTS_FIXTURES_HPP

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "stpaths/stpaths.hpp"

namespace stpaths::testing {

// Fixture graphs use the 1-based ids of the written examples; helpers
// below translate. D1: 1->2:1, 2->4:1, 1->3:2, 3->4:2, 1->4:5, 2->3:1.
inline Graph make_d1() {
  Graph g(4, true);
  g.connect(0, 1, 1);
  g.connect(1, 3, 1);
  g.connect(0, 2, 2);
  g.connect(2, 3, 2);
  g.connect(0, 3, 5);
  g.connect(1, 2, 1);
  return g;
}

// U1: 1-2:1, 2-3:1, 3-4:1, 2-4:10.
inline Graph make_u1() {
  Graph g(4, false);
  g.connect(0, 1, 1);
  g.connect(1, 2, 1);
  g.connect(2, 3, 1);
  g.connect(1, 3, 10);
  return g;
}

inline Graph make_complete(std::size_t n, bool directed) {
  Graph g(n, directed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v) g.connect(u, v, 1);
  return g;
}

/// 0-based vertex list from 1-based ids.
inline std::vector<Vertex> ids(std::initializer_list<Vertex> one_based) {
  std::vector<Vertex> out;
  for (Vertex v : one_based) out.push_back(v - 1);
  return out;
}

/// The directed graph with both arcs of every undirected edge.
inline Graph bidirected(const Graph& g) {
  Graph d(g.n(), true);
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (g.arc_alive(a)) d.connect(g.arc(a).from, g.arc(a).to, g.arc(a).weight);
  return d;
}

inline bool connected(const Graph& g) {
  if (g.n() == 0) return true;
  const auto tree = sssp(bidirected(g), 0, Direction::forward);
  for (Vertex v = 0; v < g.n(); ++v)
    if (!tree.reachable(v)) return false;
  return true;
}

/// G(n, p) with integer weights in [lo, hi].
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, bool directed, int lo, int hi) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(lo, hi);
  Graph g(n, directed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v && coin(rng)) g.connect(u, v, weight(rng));
  return g;
}

/// Connected undirected G(n, p), by rejection with a spanning-path fallback.
inline Graph random_connected_undirected(std::mt19937_64& rng, std::size_t n, double p, int lo, int hi) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Graph g = random_graph(rng, n, p, false, lo, hi);
    if (connected(g)) return g;
  }
  std::uniform_int_distribution<int> weight(lo, hi);
  std::bernoulli_distribution coin(p);
  Graph g(n, false);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (v == u + 1 || coin(rng)) g.connect(u, v, weight(rng));
  return g;
}

/// Directed graph with some negative arcs and no negative cycle: weights are
/// b(u,v) + p(v) - p(u) with b >= 0, so every cycle weighs sum(b) >= 0.
inline Graph random_negative_no_cycle(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> base(0, 4);
  std::uniform_int_distribution<int> potential(-6, 6);
  std::vector<int> pot(n);
  for (auto& x : pot) x = potential(rng);
  Graph g(n, true);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) g.connect(u, v, base(rng) + pot[v] - pot[u]);
  return g;
}

template <class Engine>
std::pair<std::vector<Path>, EnumStats> collect(Engine&& run) {
  std::vector<Path> out;
  EnumStats stats = run([&](const Path& p) { out.push_back(p); });
  return {std::move(out), stats};
}

inline std::vector<Path> sorted(std::vector<Path> paths) {
  std::sort(paths.begin(), paths.end());
  return paths;
}

/// Distinct weights of all simple st-paths.
inline std::vector<Weight> distinct_path_weights(const Graph& g, Vertex s, Vertex t) {
  std::vector<Weight> ws;
  for (const Path& p : brute_force_paths(g, s, t, Weight::infinity())) ws.push_back(p.weight);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

}  // namespace stpaths::testing

#endif  // STPATHS_TESTS_FIXTURES_HPP
