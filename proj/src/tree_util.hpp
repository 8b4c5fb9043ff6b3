#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "hcst/errors.hpp"
#include "hcst/instance.hpp"

namespace hcst::detail {

// Builds a SteinerTree from an edge set that must form a tree containing `root`.
// Costs are taken from the edges as given.
inline SteinerTree make_rooted_tree(std::span<const Edge> input, Vertex root) {
  SteinerTree tree;
  tree.edges.reserve(input.size());
  for (const Edge& e : input) tree.edges.push_back(canonical(e));
  std::sort(tree.edges.begin(), tree.edges.end());
  for (std::size_t i = 1; i < tree.edges.size(); ++i) {
    if (tree.edges[i].u == tree.edges[i - 1].u && tree.edges[i].v == tree.edges[i - 1].v) {
      throw StructureError("edge (" + std::to_string(tree.edges[i].u) + "," +
                           std::to_string(tree.edges[i].v) + ") listed twice");
    }
  }

  std::map<Vertex, std::vector<Vertex>> adjacent;
  adjacent[root];
  for (const Edge& e : tree.edges) {
    if (e.u == e.v) throw StructureError("self-loop in tree");
    adjacent[e.u].push_back(e.v);
    adjacent[e.v].push_back(e.u);
    tree.total_cost += e.cost;
  }
  if (tree.edges.size() + 1 != adjacent.size()) {
    throw StructureError("edge set is not a tree: " + std::to_string(tree.edges.size()) +
                         " edges on " + std::to_string(adjacent.size()) + " vertices");
  }
  std::queue<Vertex> frontier;
  frontier.push(root);
  tree.depth[root] = 0;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : adjacent[u]) {
      if (tree.depth.emplace(w, tree.depth[u] + 1).second) frontier.push(w);
    }
  }
  if (tree.depth.size() != adjacent.size()) {
    throw StructureError("edge set is disconnected: " + std::to_string(adjacent.size() - tree.depth.size()) +
                         " vertices unreachable from the root");
  }
  for (const auto& [v, d] : tree.depth) tree.vertices.push_back(v);
  return tree;
}

}  // namespace hcst::detail
