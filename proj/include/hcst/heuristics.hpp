#pragma once

#include <span>
#include <string_view>

#include "hcst/construction.hpp"
#include "hcst/instance.hpp"

namespace hcst {

// Phase 2 heuristics. Each takes the growth state computed from the same
// instance and returns a tree spanning the root and every terminal.

// Attaches terminals in ascending U order (ties by id) to the tree grown from the root.
SteinerTree minhig(const Instance& instance, const GrowthState& growth);
// As minhig, in descending U order.
SteinerTree maxhig(const Instance& instance, const GrowthState& growth);
// Cheaper of minhig and maxhig; minhig wins ties.
SteinerTree mm(const Instance& instance, const GrowthState& growth);
// Non root based insertion: Kruskal-style forest built in descending itr order.
SteinerTree nrbi(const Instance& instance, const GrowthState& growth);

// Cost and BFS depths of an edge set that must be a tree holding the root and
// every terminal. Throws StructureError otherwise.
SteinerTree tree_cost_and_depths(std::span<const Edge> edges, const Instance& instance);

enum class Algorithm { kVoss, kMinHig, kMaxHig, kMm, kNrbi };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kVoss, Algorithm::kMinHig,
                                               Algorithm::kMaxHig, Algorithm::kMm,
                                               Algorithm::kNrbi};

std::string_view to_string(Algorithm algorithm);
// Accepts voss, minhig, maxhig, mm, nrbi (also the short forms minh / maxh).
Algorithm parse_algorithm(std::string_view name);

SteinerTree run_algorithm(Algorithm algorithm, const Instance& instance, const GrowthState& growth);

}  // namespace hcst
