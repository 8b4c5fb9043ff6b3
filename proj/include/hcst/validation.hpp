#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcst/instance.hpp"

namespace hcst {

struct FeasibilityReport {
  bool edges_exist = true;
  bool is_tree = true;
  bool connected = true;
  bool contains_root = true;
  bool spans_terminals = true;
  bool cost_matches = true;
  int max_depth = 0;
  bool hop_feasible = true;
  std::vector<std::string> violations;

  bool pass() const {
    return edges_exist && is_tree && connected && contains_root && spans_terminals && cost_matches &&
           hop_feasible;
  }
};

// Checks a candidate tree against the instance: edges exist in the graph,
// the edges form a tree holding the root, every terminal is covered and no
// vertex lies deeper than H. Depths and cost are recomputed from the edges.
FeasibilityReport check_feasible(const SteinerTree& tree, const Instance& instance);

struct ExactResult {
  std::optional<SteinerTree> tree;  // empty when no hop-feasible tree exists
  bool feasible() const { return tree.has_value(); }
  Cost optimal_cost() const { return tree->total_cost; }
};

inline constexpr std::size_t kDefaultOracleCap = 12;

/// Exhaustive optimum for tiny instances.
///
/// Every subset of non-terminal vertices is tried; for each, the spanning
/// trees of the induced subgraph on root + terminals + subset are enumerated
/// by edge inclusion/exclusion (cheapest edges first) with a cost lower bound
/// and an early hop-depth cut on the component holding the root.
/// Throws SizeError above `vertex_cap` vertices.
ExactResult exact_hcst(const Instance& instance, std::size_t vertex_cap = kDefaultOracleCap);

}  // namespace hcst
