#include <doctest.h>

#include <numeric>
#include <queue>

#include "hcst/construction.hpp"
#include "hcst/errors.hpp"
#include "hcst/validation.hpp"
#include "support.hpp"

using namespace hcst;
using hcst::testing::fx;
using hcst::testing::r;

namespace {

// BFS depth of every vertex inside the edge set.
std::map<Vertex, int> bfs_depths(const std::vector<Edge>& edges, Vertex root) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::map<Vertex, int> depth{{root, 0}};
  std::queue<Vertex> q;
  q.push(root);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : adj[u]) {
      if (depth.emplace(w, depth[u] + 1).second) q.push(w);
    }
  }
  return depth;
}

void check_growth_invariants(const Instance& instance, const GrowthState& g) {
  CHECK(g.g_edges.size() + 1 == g.g_vertices.size());
  const auto depth = bfs_depths(g.g_edges, instance.root());
  CHECK(depth.size() == g.g_vertices.size());
  for (Vertex v : g.g_vertices) {
    REQUIRE(depth.contains(v));
    CHECK(g.u(v) == depth.at(v));
    CHECK(g.u(v) <= instance.hop_limit());
  }
  CHECK(g.itr_label.size() == instance.terminals().size());
  std::vector<int> labels;
  for (const auto& [t, itr] : g.itr_label) {
    CHECK(instance.is_terminal(t));
    labels.push_back(itr);
  }
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) CHECK(labels[i] == static_cast<int>(i) + 1);
  for (Vertex t : instance.terminals()) {
    REQUIRE(g.g_path.contains(t));
    const Path& p = g.g_path.at(t);
    CHECK(p.back() == t);
    for (std::size_t i = 1; i < p.vertices.size(); ++i) CHECK(g.u(p.vertices[i]) == g.u(p.vertices[i - 1]) + 1);
  }
  Cost sum = 0;
  for (const Edge& e : g.g_edges) sum += e.cost;
  CHECK(g.cost() == sum);
}

}  // namespace

TEST_CASE("FIG1 growth labels") {
  const Instance fig = load_fixture(Fixture::kFig1);
  const GrowthState g = phase1_grow(fig);
  CHECK(g.u(r) == 0);
  CHECK(g.u(fx(1)) == 1);
  CHECK(g.u(fx(2)) == 1);
  CHECK(g.u(fx(3)) == 2);
  CHECK(g.u(fx(4)) == 2);
  CHECK(g.u(fx(5)) == 3);
  REQUIRE(g.attach_order.size() == 2);
  CHECK(g.attach_order[0].vertices == std::vector<Vertex>{r, fx(2), fx(4), fx(5)});
  CHECK(g.attach_order[1].vertices == std::vector<Vertex>{r, fx(1), fx(3)});
  check_growth_invariants(fig, g);
}

TEST_CASE("FIG3 growth labels") {
  const Instance fig = load_fixture(Fixture::kFig3);
  const GrowthState g = phase1_grow(fig);
  CHECK(g.itr_label.at(fx(2)) == 1);
  CHECK(g.itr_label.at(fx(7)) == 2);
  CHECK(g.itr_label.at(fx(5)) == 3);
  check_growth_invariants(fig, g);
}

TEST_CASE("FIG2 growth tree") {
  const Instance fig = load_fixture(Fixture::kFig2);
  const GrowthState g = phase1_grow(fig);
  CHECK(g.cost() == 19);
  const SteinerTree pruned = prune_non_terminal_leaves(g.g_edges, fig);
  CHECK(pruned.edges == g.g_edges);
  CHECK(pruned.total_cost == 19);
  check_growth_invariants(fig, g);
}

TEST_CASE("single terminal next to the root") {
  auto graph = std::make_shared<const Graph>(3, std::vector<Edge>{{1, 2, 4}, {2, 3, 1}, {1, 3, 9}});
  const Instance instance(graph, 1, {2}, 1);
  const GrowthState g = phase1_grow(instance);
  CHECK(g.g_vertices == std::vector<Vertex>{1, 2});
  CHECK(g.g_edges == std::vector<Edge>{{1, 2, 4}});
  CHECK(g.u(2) == 1);
  CHECK(g.itr_label.at(2) == 1);
}

TEST_CASE("unreachable terminal is reported") {
  auto graph = std::make_shared<const Graph>(4, std::vector<Edge>{{1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  const Instance instance(graph, 1, {4}, 2);
  try {
    phase1_grow(instance);
    FAIL("expected InfeasibleInstance");
  } catch (const InfeasibleInstance& e) {
    CHECK(e.terminal() == 4);
  }
}

TEST_CASE("prune_non_terminal_leaves") {
  SUBCASE("FIG1 growth is already pruned") {
    const Instance fig = load_fixture(Fixture::kFig1);
    const GrowthState g = phase1_grow(fig);
    CHECK(prune_non_terminal_leaves(g.g_edges, fig).edges == g.g_edges);
  }
  SUBCASE("dangling Steiner chain") {
    const Instance fig = load_fixture(Fixture::kFig1);
    // r-1 hangs off the root with nothing terminal behind it.
    const std::vector<Edge> edges{{r, fx(2), 3}, {fx(2), fx(4), 2}, {fx(4), fx(5), 2}, {fx(3), fx(5), 2}, {r, fx(1), 4}};
    const SteinerTree pruned = prune_non_terminal_leaves(edges, fig);
    CHECK(pruned.total_cost == 9);
    CHECK(std::find(pruned.vertices.begin(), pruned.vertices.end(), fx(1)) == pruned.vertices.end());
  }
  SUBCASE("not a tree") {
    const Instance fig = load_fixture(Fixture::kFig1);
    const std::vector<Edge> cycle{{r, fx(1), 4}, {fx(1), fx(3), 4}, {fx(3), fx(5), 2},
                                  {fx(4), fx(5), 2}, {fx(2), fx(4), 2}, {r, fx(2), 3}};
    CHECK_THROWS_AS(prune_non_terminal_leaves(cycle, fig), StructureError);
  }
}

TEST_CASE("voss baseline") {
  CHECK(voss_baseline(load_fixture(Fixture::kFig1)).total_cost == 15);
  CHECK(voss_baseline(load_fixture(Fixture::kFig2)).total_cost == 19);
  CHECK(voss_baseline(load_fixture(Fixture::kFig3)).total_cost == 31);
}

TEST_CASE("growth invariants on random instances") {
  SplitMix64 rng(99);
  int grown = 0;
  for (int round = 0; round < 400; ++round) {
    auto graph = generate_random_graph(30, 30 + rng.below(120), 0, 30, rng.next());
    const int hop = 2 + static_cast<int>(rng.below(6));
    const Instance instance(graph, 1, select_terminals(*graph, 1, 2 + rng.below(10), rng.next()), hop);
    GrowthState g;
    try {
      g = phase1_grow(instance);
    } catch (const InfeasibleInstance&) {
      continue;
    }
    ++grown;
    check_growth_invariants(instance, g);
    // Every added path carries exactly one terminal, so the g_paths split G's edges.
    std::size_t path_edges = 0;
    for (const auto& [t, p] : g.g_path) path_edges += p.vertices.size() - 1;
    CHECK(path_edges == g.g_edges.size());
    const SteinerTree voss = voss_baseline(instance, g);
    CHECK(check_feasible(voss, instance).pass());
    CHECK(voss.total_cost <= g.cost());
  }
  CHECK(grown > 200);
}
