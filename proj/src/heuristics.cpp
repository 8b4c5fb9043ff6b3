#include "hcst/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>

#include "hcst/errors.hpp"
#include "hcst/hop_paths.hpp"
#include "tree_util.hpp"

namespace hcst {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<Vertex> terminals_by_u(const Instance& instance, const GrowthState& growth,
                                   bool descending) {
  std::vector<Vertex> order = instance.terminals();
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return descending ? growth.u(a) > growth.u(b) : growth.u(a) < growth.u(b);
  });
  return order;
}

// Grows a single tree from the root, attaching each terminal through the
// cheapest path from the current tree whose final depth stays within H.
//
// Greedy attachment can strand a terminal: earlier paths may have put the
// vertices around it too deep. The terminal is then wired along its root path
// in G, re-hanging any tree vertex on that path from its G predecessor. A
// vertex only ever moves to a shallower depth, so nothing else is pushed past H.
SteinerTree grow_by_levels(const Instance& instance, const GrowthState& growth, bool descending) {
  const Graph& graph = instance.graph();
  const int hop_limit = instance.hop_limit();
  const Vertex root = instance.root();
  std::vector<int> depth(graph.vertex_count() + 1, kNoLabel);
  std::vector<Vertex> parent(graph.vertex_count() + 1, kNoVertex);
  std::vector<Vertex> members{root};
  depth[root] = 0;
  std::vector<Source> sources;

  auto refresh_depths = [&] {
    std::vector<std::vector<Vertex>> children(graph.vertex_count() + 1);
    for (Vertex v : members) {
      if (v != root) children[parent[v]].push_back(v);
    }
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : children[u]) {
        depth[w] = depth[u] + 1;
        stack.push_back(w);
      }
    }
  };

  auto wire_along_growth = [&](Vertex t) {
    std::vector<Vertex> chain{t};
    while (chain.back() != root) {
      const Vertex v = chain.back();
      const Path& owner = *std::find_if(growth.attach_order.begin(), growth.attach_order.end(), [&](const Path& p) {
        return std::find(p.vertices.begin() + 1, p.vertices.end(), v) != p.vertices.end();
      });
      const auto it = std::find(owner.vertices.begin(), owner.vertices.end(), v);
      chain.push_back(*(it - 1));
    }
    std::reverse(chain.begin(), chain.end());
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const Vertex v = chain[k];
      if (depth[v] == kNoLabel) {
        members.push_back(v);
      } else if (depth[v] <= depth[chain[k - 1]] + 1) {
        continue;
      }
      parent[v] = chain[k - 1];
      depth[v] = depth[chain[k - 1]] + 1;
      refresh_depths();
    }
  };

  for (Vertex t : terminals_by_u(instance, growth, descending)) {
    if (growth.u(t) == kNoLabel) throw ArgumentError("growth state does not cover terminal " + std::to_string(t));
    if (depth[t] != kNoLabel) continue;  // absorbed as the interior of an earlier path
    sources.clear();
    for (Vertex v : members) sources.push_back({v, depth[v]});
    const HopTable table(graph, sources, hop_limit, members);
    if (!table.reachable(t, hop_limit)) {
      wire_along_growth(t);
      continue;
    }
    const Path path = extract_path(table, t, hop_limit);
    const int base = depth[path.front()];
    for (std::size_t k = 1; k < path.vertices.size(); ++k) {
      const Vertex v = path.vertices[k];
      parent[v] = path.vertices[k - 1];
      depth[v] = base + static_cast<int>(k);
      members.push_back(v);
    }
  }

  std::vector<Edge> edges;
  for (Vertex v : members) {
    if (v != root) edges.push_back({parent[v], v, *graph.edge_cost(parent[v], v)});
  }
  // Re-hanging can leave a Steiner vertex as a leaf; prune drops it.
  SteinerTree tree = prune_non_terminal_leaves(edges, instance);
  if (tree.max_depth() > hop_limit) {
    throw SolverPostconditionError("tree depth " + std::to_string(tree.max_depth()) + " exceeds the hop limit");
  }
  for (Vertex t : instance.terminals()) {
    if (!tree.depth.contains(t)) throw SolverPostconditionError("terminal " + std::to_string(t) + " missing");
  }
  return tree;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// The NRBI forest. Every vertex other than a component head hangs from a
// parent whose label is strictly smaller, so once everything hangs from the
// root each vertex's depth is at most its label.
class Forest {
 public:
  explicit Forest(const Graph& graph)
      : graph_(graph),
        label_(graph.vertex_count() + 1, kNoLabel),
        parent_(graph.vertex_count() + 1, kNoVertex),
        sets_(graph.vertex_count() + 1) {}

  bool contains(Vertex v) const { return label_[v] != kNoLabel; }
  bool is_head(Vertex v) const { return contains(v) && parent_[v] == kNoVertex; }
  int label(Vertex v) const { return label_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return keys_.contains(edge_key(u, v)); }
  bool same_component(Vertex a, Vertex b) { return sets_.find(a) == sets_.find(b); }
  const std::vector<Vertex>& members() const { return members_; }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_head(Vertex v, int label) {
    label_[v] = label;
    members_.push_back(v);
  }

  // Hangs `child` (new, or the head of another component) below `parent`.
  void hang(Vertex parent, Vertex child, int child_label) {
    if (!contains(child)) {
      members_.push_back(child);
    } else if (!is_head(child) || same_component(parent, child)) {
      throw SolverPostconditionError("attaching " + std::to_string(child) + " below " +
                                     std::to_string(parent) + " would close a cycle");
    }
    if (child_label <= label_[parent]) {
      throw SolverPostconditionError("label of " + std::to_string(child) + " would not exceed its parent " +
                                     std::to_string(parent));
    }
    label_[child] = child_label;
    parent_[child] = parent;
    sets_.unite(child, parent);
    keys_.insert(edge_key(parent, child));
    edges_.push_back({parent, child, *graph_.edge_cost(parent, child)});
  }

  std::string describe() const {
    std::ostringstream out;
    out << "forest edges:";
    for (const Edge& e : edges_) out << " (" << e.u << "-" << e.v << ")";
    out << "; heads:";
    for (Vertex v : members_) {
      if (parent_[v] == kNoVertex) out << ' ' << v;
    }
    return out.str();
  }

 private:
  const Graph& graph_;
  std::vector<int> label_;
  std::vector<Vertex> parent_;
  DisjointSets sets_;
  std::unordered_set<std::uint64_t> keys_;
  std::vector<Vertex> members_;
  std::vector<Edge> edges_;
};

Cost new_edge_cost(const Forest& forest, const Graph& graph, const Path& path) {
  Cost total = 0;
  for (std::size_t k = 1; k < path.vertices.size(); ++k) {
    const Vertex a = path.vertices[k - 1];
    const Vertex b = path.vertices[k];
    if (!forest.has_edge(a, b)) total += *graph.edge_cost(a, b);
  }
  return total;
}

}  // namespace

SteinerTree tree_cost_and_depths(std::span<const Edge> edges, const Instance& instance) {
  std::vector<Edge> priced;
  priced.reserve(edges.size());
  for (const Edge& e : edges) {
    const auto cost = instance.graph().edge_cost(e.u, e.v);
    if (!cost) throw StructureError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
    priced.push_back({e.u, e.v, *cost});
  }
  SteinerTree tree = detail::make_rooted_tree(priced, instance.root());
  for (Vertex t : instance.terminals()) {
    if (!tree.depth.contains(t)) throw StructureError("terminal " + std::to_string(t) + " missing from tree");
  }
  return tree;
}

SteinerTree minhig(const Instance& instance, const GrowthState& growth) {
  return grow_by_levels(instance, growth, false);
}

SteinerTree maxhig(const Instance& instance, const GrowthState& growth) {
  return grow_by_levels(instance, growth, true);
}

SteinerTree mm(const Instance& instance, const GrowthState& growth) {
  SteinerTree low = minhig(instance, growth);
  SteinerTree high = maxhig(instance, growth);
  return high.total_cost < low.total_cost ? high : low;
}

SteinerTree nrbi(const Instance& instance, const GrowthState& growth) {
  const Graph& graph = instance.graph();
  Forest forest(graph);
  forest.add_head(instance.root(), 0);

  std::vector<Vertex> order;
  for (const auto& [t, itr] : growth.itr_label) order.push_back(t);
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return growth.itr_label.at(a) > growth.itr_label.at(b); });
  if (order.size() != instance.terminals().size()) {
    throw ArgumentError("growth state does not label every terminal");
  }

  // owner[x]: index of the growth path that brought x into G.
  std::vector<int> owner(graph.vertex_count() + 1, -1);
  for (std::size_t j = 0; j < growth.attach_order.size(); ++j) {
    const auto& vertices = growth.attach_order[j].vertices;
    for (std::size_t k = 1; k < vertices.size(); ++k) owner[vertices[k]] = static_cast<int>(j);
  }

  std::vector<Source> sources;
  std::vector<Vertex> blocked;
  for (Vertex v : order) {
    if (forest.contains(v) && !forest.is_head(v)) continue;
    const int budget = growth.u(v);
    const Path& path_b = growth.g_path.at(v);

    // Heads left on v's growth path by later paths that attached there must
    // still be wired up; they are reached through the prefix ending at the
    // farthest one.
    std::size_t owed = 0;
    for (std::size_t k = 1; k + 1 < path_b.vertices.size(); ++k) {
      const Vertex x = path_b.vertices[k];
      if (forest.is_head(x) && x != instance.root()) owed = k;
    }

    // Candidate A: cheapest path from v to another component of the forest
    // with label(u*) + |P| <= U_v. Its interior avoids the forest, growth
    // paths that are still to be processed and the owed prefix.
    sources.clear();
    for (Vertex u : forest.members()) {
      if (forest.label(u) > budget) continue;
      if (forest.contains(v) && forest.same_component(u, v)) continue;
      sources.push_back({u, forest.label(u)});
    }
    Cost cost_a = kInfiniteCost;
    Path path_a;
    if (!sources.empty()) {
      blocked = forest.members();
      for (Vertex x = 1; x <= graph.vertex_count(); ++x) {
        if (owner[x] >= 0 && owner[x] < owner[v] && !forest.contains(x)) blocked.push_back(x);
      }
      for (std::size_t k = 1; k <= owed; ++k) blocked.push_back(path_b.vertices[k]);
      const HopTable table(graph, sources, budget, blocked);
      if (table.reachable(v, budget)) {
        path_a = extract_path(table, v, budget);
        cost_a = path_a.cost;
      }
    }

    // Candidate B: the growth path of v, paying only for edges not yet placed.
    const Cost cost_b = new_edge_cost(forest, graph, path_b);
    Path owed_prefix;
    owed_prefix.vertices.assign(path_b.vertices.begin(), path_b.vertices.begin() + static_cast<long>(owed) + 1);
    const Cost cost_owed = owed > 0 ? new_edge_cost(forest, graph, owed_prefix) : 0;

    auto lay_growth_path = [&](const Path& path) {
      const Vertex attach = path.front();
      if (!forest.contains(attach)) forest.add_head(attach, growth.u(attach));
      for (std::size_t k = 1; k < path.vertices.size(); ++k) {
        const Vertex a = path.vertices[k - 1];
        const Vertex b = path.vertices[k];
        if (!forest.has_edge(a, b)) forest.hang(a, b, growth.u(b));
      }
    };

    if (cost_a != kInfiniteCost && add_cost(cost_a, cost_owed) < cost_b) {
      const int base = forest.label(path_a.front());
      for (std::size_t k = 1; k < path_a.vertices.size(); ++k) {
        forest.hang(path_a.vertices[k - 1], path_a.vertices[k], base + static_cast<int>(k));
      }
      if (owed > 0) lay_growth_path(owed_prefix);
    } else {
      lay_growth_path(path_b);
    }
  }

  SteinerTree tree;
  try {
    tree = tree_cost_and_depths(forest.edges(), instance);
  } catch (const StructureError& e) {
    throw SolverPostconditionError(std::string("nrbi produced an invalid structure: ") + e.what() +
                                   "; " + forest.describe());
  }
  if (tree.max_depth() > instance.hop_limit()) {
    throw SolverPostconditionError("nrbi tree has depth " + std::to_string(tree.max_depth()) +
                                   " above the hop limit; " + forest.describe());
  }
  return tree;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kVoss: return "voss";
    case Algorithm::kMinHig: return "minhig";
    case Algorithm::kMaxHig: return "maxhig";
    case Algorithm::kMm: return "mm";
    case Algorithm::kNrbi: return "nrbi";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "voss") return Algorithm::kVoss;
  if (name == "minhig" || name == "minh") return Algorithm::kMinHig;
  if (name == "maxhig" || name == "maxh") return Algorithm::kMaxHig;
  if (name == "mm") return Algorithm::kMm;
  if (name == "nrbi") return Algorithm::kNrbi;
  throw ArgumentError("unknown algorithm '" + std::string(name) + "'");
}

SteinerTree run_algorithm(Algorithm algorithm, const Instance& instance, const GrowthState& growth) {
  switch (algorithm) {
    case Algorithm::kVoss: return voss_baseline(instance, growth);
    case Algorithm::kMinHig: return minhig(instance, growth);
    case Algorithm::kMaxHig: return maxhig(instance, growth);
    case Algorithm::kMm: return mm(instance, growth);
    case Algorithm::kNrbi: return nrbi(instance, growth);
  }
  throw ArgumentError("unknown algorithm");
}

}  // namespace hcst
