#include "hcst/construction.hpp"

#include <algorithm>
#include <string>

#include "hcst/errors.hpp"
#include "tree_util.hpp"

namespace hcst {

Cost GrowthState::cost() const {
  Cost total = 0;
  for (const Edge& e : g_edges) total += e.cost;
  return total;
}

GrowthState phase1_grow(const Instance& instance) {
  const Graph& graph = instance.graph();
  const int hop_limit = instance.hop_limit();

  GrowthState state;
  state.u_label.assign(graph.vertex_count() + 1, kNoLabel);
  state.u_label[instance.root()] = 0;
  state.g_vertices.push_back(instance.root());

  std::vector<Vertex> pending = instance.terminals();
  int next_itr = 1;
  std::vector<Source> sources;

  while (!pending.empty()) {
    sources.clear();
    for (Vertex v : state.g_vertices) sources.push_back({v, state.u_label[v]});
    const HopTable table(graph, sources, hop_limit, state.g_vertices);

    Vertex chosen = kNoVertex;
    Cost chosen_cost = kInfiniteCost;
    int chosen_layer = 0;
    for (Vertex t : pending) {
      const Cost c = table.dist(t, hop_limit);
      if (c == kInfiniteCost) continue;
      const int layer = table.best_layer(t, hop_limit);
      if (c < chosen_cost || (c == chosen_cost && layer < chosen_layer)) {
        chosen = t;
        chosen_cost = c;
        chosen_layer = layer;
      }
    }
    if (chosen == kNoVertex) {
      throw InfeasibleInstance("terminal " + std::to_string(pending.front()) +
                                   " cannot be connected within " + std::to_string(hop_limit) + " hops",
                               pending.front());
    }

    const Path path = extract_path(table, chosen, hop_limit);
    const Vertex attach = path.front();
    for (std::size_t k = 1; k < path.vertices.size(); ++k) {
      const Vertex prev = path.vertices[k - 1];
      const Vertex v = path.vertices[k];
      if (state.u_label[v] != kNoLabel) throw std::logic_error("growth path re-enters G");
      state.u_label[v] = state.u_label[attach] + static_cast<int>(k);
      state.g_vertices.push_back(v);
      state.g_edges.push_back(canonical({prev, v, *graph.edge_cost(prev, v)}));
      if (instance.is_terminal(v) && !state.itr_label.contains(v)) {
        state.itr_label[v] = next_itr++;
        Path prefix;
        prefix.vertices.assign(path.vertices.begin(), path.vertices.begin() + static_cast<long>(k) + 1);
        prefix.hops = static_cast<int>(k);
        prefix.start_layer = state.u_label[attach];
        for (std::size_t i = 1; i <= k; ++i) {
          prefix.cost += *graph.edge_cost(prefix.vertices[i - 1], prefix.vertices[i]);
        }
        state.g_path[v] = std::move(prefix);
        pending.erase(std::find(pending.begin(), pending.end(), v));
      }
    }
    std::sort(state.g_vertices.begin(), state.g_vertices.end());
    state.attach_order.push_back(path);
  }
  std::sort(state.g_edges.begin(), state.g_edges.end());
  return state;
}

SteinerTree prune_non_terminal_leaves(std::span<const Edge> tree_edges, const Instance& instance) {
  const SteinerTree tree = detail::make_rooted_tree(tree_edges, instance.root());

  std::map<Vertex, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    incident[tree.edges[i].u].push_back(i);
    incident[tree.edges[i].v].push_back(i);
  }
  std::vector<bool> removed(tree.edges.size(), false);
  std::map<Vertex, int> degree;
  for (const auto& [v, list] : incident) degree[v] = static_cast<int>(list.size());

  auto prunable = [&](Vertex v) {
    return v != instance.root() && !instance.is_terminal(v) && degree[v] == 1;
  };
  std::vector<Vertex> stack;
  for (const auto& [v, d] : degree) {
    if (prunable(v)) stack.push_back(v);
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!prunable(v)) continue;
    for (std::size_t i : incident[v]) {
      if (removed[i]) continue;
      removed[i] = true;
      const Vertex other = tree.edges[i].u == v ? tree.edges[i].v : tree.edges[i].u;
      --degree[v];
      --degree[other];
      if (prunable(other)) stack.push_back(other);
    }
  }

  std::vector<Edge> kept;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    if (!removed[i]) kept.push_back(tree.edges[i]);
  }
  return detail::make_rooted_tree(kept, instance.root());
}

SteinerTree voss_baseline(const Instance& instance, const GrowthState& growth) {
  SteinerTree tree = prune_non_terminal_leaves(growth.g_edges, instance);
  for (const auto& [v, d] : tree.depth) {
    if (growth.u(v) != d) throw std::logic_error("U label disagrees with depth in G");
  }
  return tree;
}

SteinerTree voss_baseline(const Instance& instance) {
  return voss_baseline(instance, phase1_grow(instance));
}

}  // namespace hcst
