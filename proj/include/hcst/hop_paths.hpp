#pragma once

#include <span>
#include <vector>

#include "hcst/instance.hpp"

namespace hcst {

inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

// Saturating addition: anything plus infinity stays infinity.
inline Cost add_cost(Cost a, Cost b) noexcept {
  if (a == kInfiniteCost || b == kInfiniteCost) return kInfiniteCost;
  if (a > kInfiniteCost - 1 - b) return kInfiniteCost;
  return a + b;
}

struct Source {
  Vertex vertex;
  int layer;  // hop depth at which paths leaving this source start
};

struct Path {
  std::vector<Vertex> vertices;  // from the source end to the target
  int hops = 0;
  Cost cost = 0;
  int start_layer = 0;  // layer of the source the path leaves from

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Layered single/multi-source shortest paths under a hop budget.
///
/// Layer h of vertex v is the hop depth v would have if reached along the
/// path: a path leaving source s (start layer l_s) with k edges ends at layer
/// l_s + k. `exact(v, h)` is the best cost to land on v at exactly layer h;
/// `dist(v, h)` is the best over layers <= h. Blocked vertices can be path
/// endpoints but are never relaxed through; a blocked source still relaxes
/// out of its own start state.
///
/// Ties in relaxation prefer lower cost, then fewer hops from the source,
/// then the smaller predecessor id. `dist` prefers the lowest layer on ties,
/// which keeps every reconstructed path simple.
class HopTable {
 public:
  HopTable(const Graph& graph, std::span<const Source> sources, int hop_limit,
           std::span<const Vertex> blocked);

  int hop_limit() const noexcept { return hop_limit_; }
  Cost dist(Vertex v, int layer) const;
  Cost exact(Vertex v, int layer) const;
  // Layer <= `layer` attaining dist(v, layer), lowest such layer; -1 if unreachable.
  int best_layer(Vertex v, int layer) const;
  bool reachable(Vertex v, int layer) const { return dist(v, layer) != kInfiniteCost; }

  struct Step {
    Vertex vertex;
    int layer;
  };
  // Predecessor of the exact state (v, layer); vertex == kNoVertex at a source.
  Step pred(Vertex v, int layer) const;

  const std::vector<Source>& sources() const noexcept { return sources_; }

 private:
  friend Path extract_path(const HopTable& table, Vertex target, int layer);

  std::size_t slot(Vertex v, int layer) const {
    return static_cast<std::size_t>(layer) * stride_ + v;
  }
  void check(Vertex v, int layer) const;

  int hop_limit_;
  std::size_t stride_;
  std::vector<Source> sources_;
  std::vector<Cost> cost_;
  std::vector<int> hops_;
  std::vector<Vertex> pred_;
  std::vector<int> best_layer_;  // per (v, layer): argmin over layers <= layer
};

HopTable hop_limited_sssp(const Graph& graph, std::span<const Source> sources, int hop_limit,
                          std::span<const Vertex> blocked = {});

// Reconstructs an optimal path for dist(target, layer). Throws NotReachable.
Path extract_path(const HopTable& table, Vertex target, int layer);

}  // namespace hcst
