#include "hcst/validation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "hcst/errors.hpp"
#include "tree_util.hpp"

namespace hcst {

FeasibilityReport check_feasible(const SteinerTree& tree, const Instance& instance) {
  FeasibilityReport report;
  const Graph& graph = instance.graph();
  const Vertex root = instance.root();

  std::set<Vertex> vertices(tree.vertices.begin(), tree.vertices.end());
  std::map<Vertex, std::vector<Vertex>> adjacent;
  Cost recomputed = 0;
  std::set<std::pair<Vertex, Vertex>> seen_edges;
  for (const Edge& raw : tree.edges) {
    const Edge e = canonical(raw);
    vertices.insert(e.u);
    vertices.insert(e.v);
    const auto cost = graph.contains(e.u) && graph.contains(e.v) ? graph.edge_cost(e.u, e.v) : std::nullopt;
    if (!cost) {
      report.edges_exist = false;
      report.violations.push_back("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") is not in the graph");
      continue;
    }
    if (!seen_edges.insert({e.u, e.v}).second) {
      report.is_tree = false;
      report.violations.push_back("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") appears twice");
      continue;
    }
    recomputed += *cost;
    adjacent[e.u].push_back(e.v);
    adjacent[e.v].push_back(e.u);
  }

  if (!vertices.contains(root)) {
    report.contains_root = false;
    report.violations.push_back("root " + std::to_string(root) + " is not in the tree");
  }
  vertices.insert(root);

  std::map<Vertex, int> depth;
  std::queue<Vertex> frontier;
  depth[root] = 0;
  frontier.push(root);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : adjacent[u]) {
      if (depth.emplace(w, depth[u] + 1).second) frontier.push(w);
    }
  }
  if (depth.size() != vertices.size()) {
    report.connected = false;
    report.violations.push_back(std::to_string(vertices.size() - depth.size()) +
                                " vertices are not connected to the root");
  }
  if (seen_edges.size() + 1 != vertices.size()) {
    report.is_tree = false;
    report.violations.push_back(std::to_string(seen_edges.size()) + " edges on " +
                                std::to_string(vertices.size()) + " vertices is not a tree");
  }
  for (Vertex t : instance.terminals()) {
    if (!vertices.contains(t)) {
      report.spans_terminals = false;
      report.violations.push_back("terminal " + std::to_string(t) + " is not covered");
    }
  }
  for (const auto& [v, d] : depth) report.max_depth = std::max(report.max_depth, d);
  report.hop_feasible = report.max_depth <= instance.hop_limit();
  if (!report.hop_feasible) {
    report.violations.push_back("depth " + std::to_string(report.max_depth) + " exceeds hop limit " +
                                std::to_string(instance.hop_limit()));
  }
  if (report.edges_exist && recomputed != tree.total_cost) {
    report.cost_matches = false;
    report.violations.push_back("reported cost " + std::to_string(tree.total_cost) +
                                " differs from edge sum " + std::to_string(recomputed));
  }
  return report;
}

namespace {

constexpr std::size_t kMaxOracleVertices = 32;

// Depth-first inclusion/exclusion over the edges of one induced subgraph.
class SpanningTreeSearch {
 public:
  SpanningTreeSearch(std::vector<Edge> edges, std::vector<Vertex> vertices, Vertex root, int hop_limit,
                     Cost& best_cost, std::vector<Edge>& best_edges)
      : edges_(std::move(edges)),
        vertices_(std::move(vertices)),
        root_(root),
        hop_limit_(hop_limit),
        best_cost_(best_cost),
        best_edges_(best_edges) {
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.cost, a.u, a.v) < std::tie(b.cost, b.u, b.v); });
    local_.fill(-1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) local_[vertices_[i]] = static_cast<int>(i);
    // prefix_[i][k]: sum of the k cheapest edges from index i on, which for a
    // cost-sorted list is just the next k edges.
    prefix_.assign(edges_.size() + 1, std::vector<Cost>(vertices_.size(), 0));
    for (std::size_t i = 0; i <= edges_.size(); ++i) {
      Cost sum = 0;
      for (std::size_t k = 1; k < vertices_.size(); ++k) {
        if (i + k - 1 < edges_.size()) {
          sum += edges_[i + k - 1].cost;
          prefix_[i][k] = sum;
        } else {
          prefix_[i][k] = kUnreachable;
        }
      }
    }
  }

  void run() {
    if (vertices_.size() == 1) {
      consider(0);
      return;
    }
    Components comp{};
    for (std::size_t i = 0; i < vertices_.size(); ++i) comp[i] = static_cast<std::uint8_t>(i);
    recurse(0, 0, comp);
  }

 private:
  using Components = std::array<std::uint8_t, kMaxOracleVertices>;
  static constexpr Cost kUnreachable = std::numeric_limits<Cost>::max() / 4;

  void recurse(std::size_t index, Cost cost, Components comp) {
    const std::size_t needed = vertices_.size() - 1 - chosen_.size();
    if (needed == 0) {
      consider(cost);
      return;
    }
    if (index >= edges_.size()) return;
    const Cost bound = prefix_[index][needed];
    if (bound >= kUnreachable || cost + bound >= best_cost_) return;

    const Edge& e = edges_[index];
    const std::uint8_t cu = comp[local_[e.u]];
    const std::uint8_t cv = comp[local_[e.v]];
    if (cu != cv) {
      Components merged = comp;
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (merged[i] == cv) merged[i] = cu;
      }
      chosen_.push_back(e);
      const std::uint8_t root_comp = comp[local_[root_]];
      if ((cu != root_comp && cv != root_comp) || root_depth_ok()) {
        recurse(index + 1, cost + e.cost, merged);
      }
      chosen_.pop_back();
    }
    recurse(index + 1, cost, comp);
  }

  // Depths in the root's component are final once assigned, so an overshoot
  // there can never be repaired by adding more edges.
  bool root_depth_ok() const {
    std::array<int, kMaxOracleVertices> depth;
    depth.fill(-1);
    std::array<std::uint8_t, kMaxOracleVertices> queue{};
    std::size_t head = 0, tail = 0;
    depth[local_[root_]] = 0;
    queue[tail++] = static_cast<std::uint8_t>(local_[root_]);
    while (head < tail) {
      const int u = queue[head++];
      for (const Edge& e : chosen_) {
        const int a = local_[e.u], b = local_[e.v];
        const int w = a == u ? b : (b == u ? a : -1);
        if (w < 0 || depth[w] >= 0) continue;
        depth[w] = depth[u] + 1;
        if (depth[w] > hop_limit_) return false;
        queue[tail++] = static_cast<std::uint8_t>(w);
      }
    }
    return true;
  }

  void consider(Cost cost) {
    if (cost >= best_cost_) return;
    std::vector<Edge> edges(chosen_.begin(), chosen_.end());
    const SteinerTree tree = detail::make_rooted_tree(edges, root_);
    if (tree.max_depth() > hop_limit_ || tree.vertices.size() != vertices_.size()) return;
    best_cost_ = cost;
    best_edges_ = std::move(edges);
  }

  std::vector<Edge> edges_;
  std::vector<Vertex> vertices_;
  Vertex root_;
  int hop_limit_;
  Cost& best_cost_;
  std::vector<Edge>& best_edges_;
  std::vector<std::vector<Cost>> prefix_;
  std::array<int, kMaxOracleVertices + 1> local_;  // vertex id -> index in vertices_
  std::vector<Edge> chosen_;
};

}  // namespace

ExactResult exact_hcst(const Instance& instance, std::size_t vertex_cap) {
  const Graph& graph = instance.graph();
  const std::size_t cap = std::min(vertex_cap, kMaxOracleVertices);
  if (graph.vertex_count() > cap) {
    throw SizeError("exact oracle refuses " + std::to_string(graph.vertex_count()) +
                    " vertices (cap " + std::to_string(cap) + ")");
  }
  std::vector<Vertex> optional_vertices;
  for (Vertex v = 1; v <= graph.vertex_count(); ++v) {
    if (v != instance.root() && !instance.is_terminal(v)) optional_vertices.push_back(v);
  }

  Cost best_cost = std::numeric_limits<Cost>::max();
  std::vector<Edge> best_edges;
  const std::uint64_t subsets = std::uint64_t{1} << optional_vertices.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<bool> member(graph.vertex_count() + 1, false);
    std::vector<Vertex> vertices{instance.root()};
    member[instance.root()] = true;
    for (Vertex t : instance.terminals()) {
      member[t] = true;
      vertices.push_back(t);
    }
    for (std::size_t i = 0; i < optional_vertices.size(); ++i) {
      if (mask >> i & 1U) {
        member[optional_vertices[i]] = true;
        vertices.push_back(optional_vertices[i]);
      }
    }
    std::sort(vertices.begin(), vertices.end());
    std::vector<Edge> induced;
    for (const Edge& e : graph.edges()) {
      if (member[e.u] && member[e.v]) induced.push_back(e);
    }
    SpanningTreeSearch(std::move(induced), std::move(vertices), instance.root(), instance.hop_limit(),
                       best_cost, best_edges)
        .run();
  }

  ExactResult result;
  if (best_cost != std::numeric_limits<Cost>::max()) result.tree = detail::make_rooted_tree(best_edges, instance.root());
  return result;
}

}  // namespace hcst
