#include "hcst/hop_paths.hpp"

#include <algorithm>
#include <string>

#include "hcst/errors.hpp"

namespace hcst {

HopTable::HopTable(const Graph& graph, std::span<const Source> sources, int hop_limit,
                   std::span<const Vertex> blocked)
    : hop_limit_(hop_limit),
      stride_(graph.vertex_count() + 1),
      sources_(sources.begin(), sources.end()) {
  if (hop_limit < 0) throw ArgumentError("negative hop limit");
  if (sources.empty()) throw ArgumentError("hop table needs at least one source");
  const std::size_t layers = static_cast<std::size_t>(hop_limit) + 1;
  cost_.assign(layers * stride_, kInfiniteCost);
  hops_.assign(layers * stride_, -1);
  pred_.assign(layers * stride_, kNoVertex);
  best_layer_.assign(layers * stride_, -1);

  std::vector<bool> is_blocked(stride_, false);
  for (Vertex b : blocked) {
    if (graph.contains(b)) is_blocked[b] = true;
  }
  for (const Source& s : sources) {
    if (!graph.contains(s.vertex)) throw ArgumentError("source " + std::to_string(s.vertex) + " not in graph");
    if (s.layer < 0 || s.layer > hop_limit) {
      throw ArgumentError("source layer " + std::to_string(s.layer) + " outside [0, " +
                          std::to_string(hop_limit) + "]");
    }
    const std::size_t i = slot(s.vertex, s.layer);
    cost_[i] = 0;
    hops_[i] = 0;
    pred_[i] = kNoVertex;
  }

  for (int h = 0; h < hop_limit; ++h) {
    for (Vertex u = 1; u < stride_; ++u) {
      const std::size_t from = slot(u, h);
      if (cost_[from] == kInfiniteCost) continue;
      // A source state has zero hops; any other state on a blocked vertex is a dead end.
      if (is_blocked[u] && hops_[from] != 0) continue;
      const Cost base = cost_[from];
      const int next_hops = hops_[from] + 1;
      for (const Adjacent& a : graph.neighbors(u)) {
        const std::size_t to = slot(a.to, h + 1);
        const Cost candidate = add_cost(base, a.cost);
        const bool better =
            candidate < cost_[to] ||
            (candidate == cost_[to] &&
             (next_hops < hops_[to] || (next_hops == hops_[to] && u < pred_[to])));
        if (better) {
          cost_[to] = candidate;
          hops_[to] = next_hops;
          pred_[to] = u;
        }
      }
    }
  }

  for (Vertex v = 1; v < stride_; ++v) {
    int best = -1;
    for (int h = 0; h <= hop_limit; ++h) {
      const Cost c = cost_[slot(v, h)];
      if (c != kInfiniteCost && (best < 0 || c < cost_[slot(v, best)])) best = h;
      best_layer_[slot(v, h)] = best;
    }
  }
}

void HopTable::check(Vertex v, int layer) const {
  if (v == kNoVertex || v >= stride_ || layer < 0 || layer > hop_limit_) {
    throw ArgumentError("hop table lookup out of range: vertex " + std::to_string(v) + ", layer " +
                        std::to_string(layer));
  }
}

Cost HopTable::dist(Vertex v, int layer) const {
  check(v, layer);
  const int best = best_layer_[slot(v, layer)];
  return best < 0 ? kInfiniteCost : cost_[slot(v, best)];
}

Cost HopTable::exact(Vertex v, int layer) const {
  check(v, layer);
  return cost_[slot(v, layer)];
}

int HopTable::best_layer(Vertex v, int layer) const {
  check(v, layer);
  return best_layer_[slot(v, layer)];
}

HopTable::Step HopTable::pred(Vertex v, int layer) const {
  check(v, layer);
  const std::size_t i = slot(v, layer);
  if (cost_[i] == kInfiniteCost || hops_[i] == 0) return {kNoVertex, layer};
  return {pred_[i], layer - 1};
}

HopTable hop_limited_sssp(const Graph& graph, std::span<const Source> sources, int hop_limit,
                          std::span<const Vertex> blocked) {
  return HopTable(graph, sources, hop_limit, blocked);
}

Path extract_path(const HopTable& table, Vertex target, int layer) {
  const int best = table.best_layer(target, layer);
  if (best < 0) {
    throw NotReachable("vertex " + std::to_string(target) + " is not reachable within layer " +
                       std::to_string(layer));
  }
  Path path;
  path.cost = table.exact(target, best);
  Vertex v = target;
  int h = best;
  for (;;) {
    path.vertices.push_back(v);
    const std::size_t i = table.slot(v, h);
    if (table.hops_[i] == 0) break;
    v = table.pred_[i];
    --h;
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  path.hops = static_cast<int>(path.vertices.size()) - 1;
  path.start_layer = h;
  return path;
}

}  // namespace hcst
