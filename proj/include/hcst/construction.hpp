#pragma once

#include <map>
#include <span>
#include <vector>

#include "hcst/hop_paths.hpp"
#include "hcst/instance.hpp"

namespace hcst {

inline constexpr int kNoLabel = -1;

/// Output of the Prim-style growth phase shared by every heuristic.
///
/// G starts as the root and repeatedly absorbs the cheapest hop-feasible path
/// from a vertex of G to a terminal outside it. Candidate paths never pass
/// through vertices already in G, so G stays a tree and `u_label[v]` is the
/// depth of v inside it.
struct GrowthState {
  std::vector<Vertex> g_vertices;  // sorted
  std::vector<Edge> g_edges;       // canonical, sorted
  std::vector<int> u_label;        // indexed by vertex id, kNoLabel outside G
  std::map<Vertex, int> itr_label;
  // Prefix of the added path running from its attachment vertex to the terminal.
  std::map<Vertex, Path> g_path;
  std::vector<Path> attach_order;

  int u(Vertex v) const { return v < u_label.size() ? u_label[v] : kNoLabel; }
  bool in_g(Vertex v) const { return u(v) != kNoLabel; }
  Cost cost() const;
};

GrowthState phase1_grow(const Instance& instance);

// Removes non-root, non-terminal leaves until none remain. Throws StructureError
// when `tree_edges` is not a tree containing the root.
SteinerTree prune_non_terminal_leaves(std::span<const Edge> tree_edges, const Instance& instance);

// Constructive baseline: the leaf-pruned growth tree G.
SteinerTree voss_baseline(const Instance& instance, const GrowthState& growth);
SteinerTree voss_baseline(const Instance& instance);

}  // namespace hcst
