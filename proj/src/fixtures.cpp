#include "hcst/instance.hpp"

#include <string>

namespace hcst {

namespace {

// Endpoint label -1 stands for the root r.
constexpr int kRoot = -1;

struct LabeledEdge {
  int a;
  int b;
  Cost cost;
};

Instance build(int labels, std::initializer_list<LabeledEdge> edges,
               std::initializer_list<int> terminals, int hop_limit) {
  std::vector<Edge> list;
  for (const LabeledEdge& e : edges) {
    const Vertex u = e.a == kRoot ? 1 : fixture_vertex(e.a);
    const Vertex v = e.b == kRoot ? 1 : fixture_vertex(e.b);
    list.push_back({u, v, e.cost});
  }
  std::vector<Vertex> q;
  for (int t : terminals) q.push_back(fixture_vertex(t));
  auto graph = std::make_shared<const Graph>(static_cast<std::size_t>(labels + 1), list);
  return Instance(std::move(graph), 1, std::move(q), hop_limit);
}

}  // namespace

Instance load_fixture(Fixture name) {
  switch (name) {
    case Fixture::kFig1:
      return build(5,
                   {{kRoot, 1, 4}, {1, 3, 4}, {kRoot, 2, 3}, {2, 4, 2}, {4, 5, 2}, {3, 5, 2}},
                   {3, 5}, 3);
    case Fixture::kFig2:
      return build(9,
                   {{kRoot, 2, 2},
                    {2, 6, 3},
                    {kRoot, 1, 2},
                    {1, 4, 2},
                    {4, 8, 2},
                    {kRoot, 3, 5},
                    {3, 5, 1},
                    {5, 7, 1},
                    {7, 9, 1},
                    {7, 8, 1},
                    {3, 6, 1}},
                   {6, 8, 9}, 4);
    case Fixture::kFig3:
      return build(7,
                   {{kRoot, 1, 4},
                    {1, 2, 4},
                    {2, 4, 2},
                    {4, 6, 2},
                    {6, 7, 2},
                    {kRoot, 3, 5},
                    {3, 5, 12},
                    {2, 3, 7}},
                   {2, 5, 7}, 5);
  }
  throw std::logic_error("unknown fixture");
}

std::optional<Fixture> fixture_from_name(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "fig1") return Fixture::kFig1;
  if (lower == "fig2") return Fixture::kFig2;
  if (lower == "fig3") return Fixture::kFig3;
  return std::nullopt;
}

}  // namespace hcst
