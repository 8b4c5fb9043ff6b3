#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hcst {

// Vertex ids are 1-based; 0 is never a valid vertex.
using Vertex = std::uint32_t;
using Cost = std::int64_t;

inline constexpr Vertex kNoVertex = 0;

struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  Cost cost = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes an undirected edge so that u < v.
inline Edge canonical(Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  return e;
}

struct Adjacent {
  Vertex to;
  Cost cost;
  std::size_t edge;  // index into Graph::edges()
};

// A duplicate edge that was merged while building a Graph.
struct Collapse {
  Vertex u;
  Vertex v;
  Cost dropped_cost;
  Cost kept_cost;
};

/// Simple undirected graph with non-negative integer costs.
///
/// Duplicate edges collapse to the minimum cost and every collapse is
/// remembered so it can be reported later. Self-loops, negative costs and
/// out-of-range endpoints are rejected with ArgumentError. Adjacency lists are
/// sorted by neighbour id so that every traversal is deterministic.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Adjacent>& neighbors(Vertex v) const { return adjacency_.at(v); }
  const std::vector<Collapse>& collapses() const noexcept { return collapses_; }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= vertex_count_; }
  std::optional<Cost> edge_cost(Vertex u, Vertex v) const;

 private:
  static std::uint64_t key(Vertex u, Vertex v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Adjacent>> adjacency_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<Collapse> collapses_;
};

/// A graph plus root, terminal set Q (root excluded) and hop limit H.
class Instance {
 public:
  Instance(std::shared_ptr<const Graph> graph, Vertex root, std::vector<Vertex> terminals,
           int hop_limit);

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
  Vertex root() const noexcept { return root_; }
  // Sorted ascending, without duplicates and without the root.
  const std::vector<Vertex>& terminals() const noexcept { return terminals_; }
  int hop_limit() const noexcept { return hop_limit_; }
  bool is_terminal(Vertex v) const noexcept;

  Instance with_hop_limit(int hop_limit) const;

 private:
  std::shared_ptr<const Graph> graph_;
  Vertex root_;
  std::vector<Vertex> terminals_;
  std::vector<bool> terminal_mask_;
  int hop_limit_;
};

/// A feasible (or candidate) solution tree. Edges are canonical and sorted,
/// vertices sorted, depth holds the hop count from the root.
struct SteinerTree {
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
  Cost total_cost = 0;
  std::map<Vertex, int> depth;

  int max_depth() const;
  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;
};

struct OrlibFile {
  std::shared_ptr<const Graph> graph;
  std::vector<Vertex> terminals;
};

// Parses the whitespace-separated OR-Library STP token stream:
// `n m`, m triples `u v c`, `t`, t terminal ids.
OrlibFile parse_orlib(std::string_view text);
OrlibFile read_orlib_file(const std::string& path);
std::string write_orlib(const Graph& graph, std::span<const Vertex> terminals);

// Deterministic sample of `count` distinct vertices from V \ {root}, sorted.
std::vector<Vertex> select_terminals(const Graph& graph, Vertex root, std::size_t count,
                                     std::uint64_t seed);

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, one add + mix per draw.
/// Pinned here so terminal vectors are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Unbiased draw in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

enum class Fixture { kFig1, kFig2, kFig3 };

// The three worked examples. Vertex r is id 1 and the example's vertex k is id k + 1.
Instance load_fixture(Fixture name);
std::optional<Fixture> fixture_from_name(std::string_view name);
constexpr Vertex fixture_vertex(int label) { return static_cast<Vertex>(label + 1); }

struct GraphDiagnostics {
  std::vector<Vertex> isolated;
  std::vector<Collapse> collapses;
  bool root_component_connected = true;  // every vertex reachable from the root
  std::size_t root_component_size = 0;
  std::vector<std::string> warnings;
};

GraphDiagnostics validate_graph(const Graph& graph, Vertex root = 1);

}  // namespace hcst
