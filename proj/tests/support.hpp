#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "hcst/bench.hpp"
#include "hcst/instance.hpp"

namespace hcst::testing {

// Fixture vertex by its label in the worked examples; r is the root.
inline constexpr Vertex r = 1;
constexpr Vertex fx(int label) { return fixture_vertex(label); }

struct RandomCase {
  Instance instance;
  std::uint64_t seed;
};

// Small connected instance: n in [4, max_n], costs in [1, 20], H in [2, 5], |Q| in [2, 5].
inline RandomCase random_small_instance(SplitMix64& rng, std::size_t max_n = 10) {
  const std::size_t n = 4 + rng.below(max_n - 3);
  const std::size_t max_edges = n * (n - 1) / 2;
  const std::size_t m = n - 1 + rng.below(max_edges - (n - 1) + 1);
  const std::uint64_t seed = rng.next();
  auto graph = generate_random_graph(n, m, 1, 20, seed);
  const std::size_t q = 2 + rng.below(std::min<std::size_t>(4, n - 2));
  const int hop = 2 + static_cast<int>(rng.below(4));
  auto terminals = select_terminals(*graph, 1, q, rng.next());
  return {Instance(graph, 1, std::move(terminals), hop), seed};
}

// Minimum over simple paths from any source (s, l) to `target` with l + |P| <= layer,
// whose interior vertices are not blocked. Plain DFS over all simple paths.
inline Cost brute_force_dist(const Graph& graph, const std::vector<Source>& sources,
                             const std::vector<Vertex>& blocked, Vertex target, int layer) {
  std::vector<bool> is_blocked(graph.vertex_count() + 1, false);
  for (Vertex b : blocked) is_blocked[b] = true;
  Cost best = std::numeric_limits<Cost>::max();
  std::vector<bool> on_path(graph.vertex_count() + 1, false);
  std::function<void(Vertex, int, Cost, bool)> walk = [&](Vertex v, int depth, Cost cost, bool at_source) {
    if (v == target) best = std::min(best, cost);
    if (depth == layer) return;
    if (!at_source && is_blocked[v]) return;
    for (const Adjacent& a : graph.neighbors(v)) {
      if (on_path[a.to]) continue;
      on_path[a.to] = true;
      walk(a.to, depth + 1, cost + a.cost, false);
      on_path[a.to] = false;
    }
  };
  for (const Source& s : sources) {
    if (s.layer > layer) continue;
    on_path[s.vertex] = true;
    walk(s.vertex, s.layer, 0, true);
    on_path[s.vertex] = false;
  }
  return best;
}

// Exact optimum by assigning every non-root vertex either "absent" or a parent
// among its neighbours, keeping assignments that form a root tree of depth <= H
// covering every terminal. Exponential; meant for n <= 7.
inline std::optional<Cost> parent_assignment_optimum(const Instance& instance) {
  const Graph& graph = instance.graph();
  const std::size_t n = graph.vertex_count();
  std::vector<Vertex> others;
  for (Vertex v = 1; v <= n; ++v) {
    if (v != instance.root()) others.push_back(v);
  }
  std::vector<Vertex> parent(n + 1, kNoVertex);
  std::optional<Cost> best;
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == others.size()) {
      Cost cost = 0;
      for (Vertex v : others) {
        if (parent[v] == kNoVertex) {
          if (instance.is_terminal(v)) return;
          continue;
        }
        cost += *graph.edge_cost(v, parent[v]);
      }
      for (Vertex v : others) {
        if (parent[v] == kNoVertex) continue;
        int depth = 0;
        Vertex w = v;
        while (w != instance.root()) {
          w = parent[w];
          if (w == kNoVertex || ++depth > instance.hop_limit()) return;
        }
      }
      if (!best || cost < *best) best = cost;
      return;
    }
    const Vertex v = others[i];
    parent[v] = kNoVertex;
    assign(i + 1);
    for (const Adjacent& a : graph.neighbors(v)) {
      parent[v] = a.to;
      assign(i + 1);
    }
    parent[v] = kNoVertex;
  };
  assign(0);
  return best;
}

}  // namespace hcst::testing
