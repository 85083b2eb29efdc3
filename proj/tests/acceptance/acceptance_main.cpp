// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every expected value comes from the brute-force oracle or from
// the closed-form counts noted inline.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"

namespace {

using namespace stpaths;
using stpaths::testing::collect;
using stpaths::testing::sorted;

struct Instance {
  Graph graph;
  Vertex s;
  Vertex t;
  Weight alpha;
  std::vector<Path> oracle;  // sorted
};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) first_failure = what;
    pass = false;
  }
};

// One instance per distinct st-path weight of each graph.
std::vector<Instance> expand(const Graph& g, Vertex s, Vertex t) {
  std::vector<Instance> out;
  for (const Weight& alpha : stpaths::testing::distinct_path_weights(g, s, t))
    out.push_back({g, s, t, alpha, brute_force_paths(g, s, t, alpha)});
  return out;
}

std::pair<Vertex, Vertex> distinct_pair(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  const Vertex s = pick(rng);
  Vertex t = pick(rng);
  while (t == s) t = pick(rng);
  return {s, t};
}

std::size_t size_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Instance> directed_instances(std::size_t& graphs) {
  std::mt19937_64 rng(20240601);
  std::vector<Instance> all;
  graphs = 300;
  for (std::size_t i = 0; i < graphs; ++i) {
    const std::size_t n = size_between(rng, 2, 9);
    const Graph g = stpaths::testing::random_graph(rng, n, 0.4, true, 1, 5);
    const auto [s, t] = distinct_pair(rng, n);
    for (auto& inst : expand(g, s, t)) all.push_back(std::move(inst));
  }
  return all;
}

std::vector<Instance> undirected_instances(std::size_t& graphs) {
  std::mt19937_64 rng(20240602);
  std::vector<Instance> all;
  graphs = 300;
  for (std::size_t i = 0; i < graphs; ++i) {
    const std::size_t n = size_between(rng, 2, 9);
    const Graph g = stpaths::testing::random_connected_undirected(rng, n, 0.4, 1, 5);
    const auto [s, t] = distinct_pair(rng, n);
    for (auto& inst : expand(g, s, t)) all.push_back(std::move(inst));
  }
  return all;
}

template <class Run>
auto run_on(Instance& inst, Run&& run) {
  return collect([&](auto sink) { return run(BoundedPathQuery{inst.graph, inst.s, inst.t, inst.alpha}, sink); });
}

auto recursive = [](const BoundedPathQuery& q, auto sink) { return list_bounded_directed(q, sink); };
auto lcp_engine = [](const BoundedPathQuery& q, auto sink) { return list_bounded_undirected(q, sink); };
auto lifo = [](const BoundedPathQuery& q, auto sink) { return list_iterative(q, ContainerKind::lifo, sink); };
auto min_key = [](const BoundedPathQuery& q, auto sink) { return list_iterative(q, ContainerKind::min_key, sink); };

std::vector<Weight> weights_of(const std::vector<Path>& paths) {
  std::vector<Weight> ws;
  for (const Path& p : paths) ws.push_back(p.weight);
  return ws;
}

std::string counts(std::size_t graphs, std::size_t instances) {
  return std::to_string(graphs) + " graphs, " + std::to_string(instances) + " instances";
}

Outcome oracle_directed(std::vector<Instance>& cases, std::size_t graphs) {
  Outcome o;
  for (auto& inst : cases) o.require(sorted(run_on(inst, recursive).first) == inst.oracle, "set mismatch");
  o.detail = counts(graphs, cases.size());
  return o;
}

Outcome oracle_undirected(std::vector<Instance>& cases, std::size_t graphs) {
  Outcome o;
  for (auto& inst : cases) {
    o.require(sorted(run_on(inst, lcp_engine).first) == inst.oracle, "lcp engine set mismatch");
    o.require(sorted(run_on(inst, lifo).first) == inst.oracle, "lifo set mismatch");
    o.require(sorted(run_on(inst, min_key).first) == inst.oracle, "min-key set mismatch");
  }
  o.detail = counts(graphs, cases.size()) + ", 3 engines";
  return o;
}

Outcome lcp_correctness() {
  Outcome o;
  std::mt19937_64 rng(20240603);
  std::size_t checked = 0, split = 0;
  while (checked < 300) {
    const std::size_t n = size_between(rng, 2, 9);
    const Graph g = stpaths::testing::random_connected_undirected(rng, n, 0.4, 1, 5);
    const auto [s, t] = distinct_pair(rng, n);
    const auto ws = stpaths::testing::distinct_path_weights(g, s, t);
    // d(s,t) <= alpha: pick any path weight, plus a slack above the largest.
    std::vector<Weight> alphas{ws[size_between(rng, 0, ws.size() - 1)], ws.back() + Weight(1, 2)};
    for (const Weight& alpha : alphas) {
      const auto oracle = brute_force_paths(g, s, t, alpha);
      const auto expected = common_prefix(oracle);
      const Path got = longest_common_prefix(g, s, t, alpha);
      o.require(got.vertices == expected, "prefix mismatch");
      o.require(got.weight == path_weight(g, got), "prefix weight mismatch");
      if (oracle.size() > 1) ++split;
    }
    ++checked;
  }
  o.detail = std::to_string(checked) + " graphs, " + std::to_string(2 * checked) + " queries (" + std::to_string(split) +
             " with more than one path)";
  return o;
}

Outcome reverse_order(std::vector<Instance>& cases) {
  Outcome o;
  for (auto& inst : cases) {
    auto rec = run_on(inst, recursive).first;
    auto back = run_on(inst, lifo).first;
    std::reverse(back.begin(), back.end());
    o.require(back == rec, "reversed lifo sequence differs");
  }
  o.detail = std::to_string(cases.size()) + " instances";
  return o;
}

Outcome monotone_order(std::vector<Instance>& directed, std::vector<Instance>& undirected) {
  Outcome o;
  std::size_t total = 0;
  for (auto* cases : {&directed, &undirected}) {
    for (auto& inst : *cases) {
      ++total;
      const auto best = run_on(inst, min_key).first;
      const auto ws = weights_of(best);
      o.require(std::is_sorted(ws.begin(), ws.end()), "min-key weights decrease");

      std::vector<Path> top;
      k_shortest(inst.graph, inst.s, inst.t, inst.oracle.size(), [&](const Path& p) { top.push_back(p); });
      auto expected = weights_of(inst.oracle);
      std::sort(expected.begin(), expected.end());
      o.require(weights_of(top) == expected, "k_shortest weights differ from sorted oracle");
      // Ties may come in any order, but the paths must be oracle paths.
      o.require(sorted(top) == inst.oracle, "k_shortest paths differ from oracle");
    }
  }
  o.detail = std::to_string(total) + " instances";
  return o;
}

Outcome occupancy(std::vector<Instance>& directed, std::vector<Instance>& undirected) {
  Outcome o;
  std::size_t worst_lifo = 0, worst_heap = 0;
  for (auto* cases : {&directed, &undirected}) {
    for (auto& inst : *cases) {
      const auto l = run_on(inst, lifo).second;
      const auto h = run_on(inst, min_key).second;
      o.require(l.container_peak <= inst.graph.m(), "lifo peak > m");
      o.require(h.container_peak <= inst.oracle.size(), "min-key peak > gamma");
      worst_lifo = std::max(worst_lifo, l.container_peak);
      worst_heap = std::max(worst_heap, h.container_peak);
    }
  }
  o.detail = "max lifo peak " + std::to_string(worst_lifo) + ", max min-key peak " + std::to_string(worst_heap);
  return o;
}

Outcome delay(std::vector<Instance>& cases) {
  Outcome o;
  std::size_t worst = 0;
  for (auto& inst : cases) {
    const auto st = run_on(inst, recursive).second;
    o.require(st.sssp_max_between_emissions <= 2 * inst.graph.n(), "gap > 2n");
    worst = std::max(worst, st.sssp_max_between_emissions);
  }
  std::mt19937_64 rng(20240607);
  std::size_t unit = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = size_between(rng, 2, 9);
    const Graph g = stpaths::testing::random_graph(rng, n, 0.4, true, 1, 1);
    const auto [s, t] = distinct_pair(rng, n);
    for (auto& inst : expand(g, s, t)) {
      ++unit;
      const auto st = run_on(inst, recursive).second;
      const auto bound = 2 * (static_cast<std::size_t>(inst.alpha.floor()) + 1);
      o.require(st.sssp_max_between_emissions <= bound, "unit-weight gap > 2(floor(alpha)+1)");
      o.require(st.sssp_max_between_emissions <= 2 * n, "unit-weight gap > 2n");
    }
  }
  o.detail = std::to_string(cases.size()) + " weighted + " + std::to_string(unit) +
             " unit-weight instances, max gap " + std::to_string(worst);
  return o;
}

Outcome amortized(std::vector<Instance>& cases) {
  Outcome o;
  double worst_ratio = 0;
  for (auto& inst : cases) {
    const auto st = run_on(inst, lcp_engine).second;
    o.require(st.sssp_total <= 6 * st.paths_emitted, "sssp_total > 6 gamma");
    o.require(st.narrow_internal_nodes == 0, "internal node with < 2 children");
    worst_ratio = std::max(worst_ratio, double(st.sssp_total) / double(st.paths_emitted));
  }
  std::ostringstream d;
  d << cases.size() << " instances, max sssp/gamma " << worst_ratio;
  o.detail = d.str();
  return o;
}

Outcome reweighting() {
  Outcome o;
  std::mt19937_64 rng(20240609);
  std::size_t graphs = 0, paths = 0;
  while (graphs < 100) {
    const std::size_t n = size_between(rng, 2, 8);
    const Graph g = stpaths::testing::random_negative_no_cycle(rng, n, 0.4);
    if (!g.has_negative_weight()) continue;
    ++graphs;
    const auto [s, t] = distinct_pair(rng, n);
    const ReweightResult rw = johnson_reweight(g, s, t);
    o.require(!rw.graph.has_negative_weight(), "negative reweighted arc");
    for (const Path& p : brute_force_paths(g, s, t, Weight::infinity())) {
      ++paths;
      o.require(path_weight(rw.graph, p) == p.weight + rw.offset, "w'(pi) != w(pi) + C");
    }
  }
  std::size_t cycles = 0;
  for (; cycles < 50; ++cycles) {
    const std::size_t n = size_between(rng, 3, 8);
    const Graph base = stpaths::testing::random_graph(rng, n, 0.4, true, 1, 5);
    // Plant 0 -> 1 -> 2 -> 0 with total weight -1 on top of the random arcs.
    const auto on_cycle = [](Vertex u, Vertex v) { return u < 3 && v < 3; };
    Graph g(n, true);
    for (ArcId a = 0; a < base.arc_count(); ++a)
      if (!on_cycle(base.arc(a).from, base.arc(a).to)) g.connect(base.arc(a).from, base.arc(a).to, base.arc(a).weight);
    g.connect(0, 1, 2);
    g.connect(1, 2, 3);
    g.connect(2, 0, -6);
    const auto [s, t] = distinct_pair(rng, n);
    bool threw = false;
    try {
      johnson_reweight(g, s, t);
    } catch (const NegativeCycle&) {
      threw = true;
    }
    o.require(threw, "planted negative cycle not reported");
  }
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(paths) + " paths, " + std::to_string(cycles) +
             " planted cycles";
  return o;
}

Outcome counting() {
  Outcome o;
  // K5, unit weights, alpha = 4: sum over k = 0..3 of 3!/(3-k)! = 1 + 3 + 6 + 6.
  Graph k5 = stpaths::testing::make_complete(5, true);
  const std::size_t expected_k5 = 1 + 3 + 6 + 6;
  o.require(brute_force_paths(k5, 0, 4, 4).size() == expected_k5, "oracle K5 count");
  std::size_t k5_counts[3];
  {
    Instance inst{k5, 0, 4, Weight(4), {}};
    k5_counts[0] = run_on(inst, recursive).first.size();
    k5_counts[1] = run_on(inst, lifo).first.size();
    k5_counts[2] = run_on(inst, min_key).first.size();
  }
  for (std::size_t c : k5_counts) o.require(c == expected_k5, "K5 count");
  Graph k5u = stpaths::testing::make_complete(5, false);
  {
    Instance inst{k5u, 0, 4, Weight(4), {}};
    o.require(run_on(inst, lcp_engine).first.size() == expected_k5, "undirected K5 count");
  }

  Graph d1 = stpaths::testing::make_d1();
  const std::pair<int, std::size_t> d1_cases[] = {{4, 3}, {5, 4}, {1, 0}};
  for (const auto& [alpha, count] : d1_cases) {
    o.require(brute_force_paths(d1, 0, 3, alpha).size() == count, "oracle D1 count");
    Instance inst{d1, 0, 3, Weight(alpha), {}};
    o.require(run_on(inst, recursive).first.size() == count, "D1 recursive count");
    o.require(run_on(inst, lifo).first.size() == count, "D1 lifo count");
    o.require(run_on(inst, min_key).first.size() == count, "D1 min-key count");
  }
  o.detail = "K5 = " + std::to_string(k5_counts[0]) + ", D1 = 3/4/0";
  return o;
}

Outcome scale() {
  Outcome o;
  using clock = std::chrono::steady_clock;
  const auto seconds = [](clock::duration d) { return std::chrono::duration<double>(d).count(); };
  constexpr std::size_t n = 2000;
  constexpr double p = 20000.0 / (n * (n - 1.0));
  constexpr std::size_t target_gamma = 1000;

  std::mt19937_64 rng(20240611);
  Graph g = stpaths::testing::random_graph(rng, n, p, true, 1, 100);
  const Vertex s = 0, t = n - 1;
  const ShortestPathTree from_s = sssp(g, s, Direction::forward);
  if (!from_s.reachable(t)) {
    o.require(false, "t unreachable from s");
    return o;
  }

  // gamma(alpha) is monotone; probe with capped runs for the least integer
  // alpha reaching the target count.
  const auto probe = [&](const Weight& alpha) {
    std::size_t count = 0;
    list_bounded_directed(BoundedPathQuery{g, s, t, alpha}, [&](const Path&) { return ++count < target_gamma; });
    return count;
  };
  std::int64_t lo = from_s.distance(t).floor();
  std::int64_t hi = lo + 1;
  std::size_t probes = 0;
  while (probe(Weight(hi)) < target_gamma) {
    lo = hi;
    hi = lo + 2 * (hi - from_s.distance(t).floor()) + 1;
    ++probes;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (probe(Weight(mid)) >= target_gamma ? hi : lo) = mid;
    ++probes;
  }
  const Weight alpha(hi);

  std::ostringstream d;
  d << "n=" << n << " m=" << g.m() << " alpha=" << alpha << " (" << probes << " probes)";
  for (const auto& [name, kind] : {std::pair{"recursive", -1}, std::pair{"lifo", 0}}) {
    const auto start = clock::now();
    std::size_t count = 0;
    const auto sink = [&](const Path&) { ++count; };
    const BoundedPathQuery q{g, s, t, alpha};
    const EnumStats st = kind < 0 ? list_bounded_directed(q, sink) : list_iterative(q, ContainerKind::lifo, sink);
    const double secs = seconds(clock::now() - start);
    o.require(count >= target_gamma && count <= 4 * target_gamma, std::string(name) + " gamma not near target");
    o.require(st.container_peak <= g.m(), std::string(name) + " container_peak > m");
    o.require(secs < 60.0, std::string(name) + " took >= 60 s");
    d << "; " << name << ": gamma=" << count << " peak=" << st.container_peak << " time=" << secs << "s";
  }
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  std::size_t directed_graphs = 0, undirected_graphs = 0;
  auto directed = directed_instances(directed_graphs);
  auto undirected = undirected_instances(undirected_graphs);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence, directed", [&] { return oracle_directed(directed, directed_graphs); }},
      {"oracle equivalence, undirected", [&] { return oracle_undirected(undirected, undirected_graphs); }},
      {"longest common prefix", lcp_correctness},
      {"reverse-order law", [&] { return reverse_order(directed); }},
      {"monotone order and k_shortest", [&] { return monotone_order(directed, undirected); }},
      {"occupancy bounds", [&] { return occupancy(directed, undirected); }},
      {"delay witness", [&] { return delay(directed); }},
      {"amortized witness", [&] { return amortized(undirected); }},
      {"reweighting identity", reweighting},
      {"counting check", counting},
      {"scale smoke test", scale},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                o.pass ? "" : " -- first failure: ", o.pass ? "" : o.first_failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
