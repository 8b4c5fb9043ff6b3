#include "hcst/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <sstream>

#include "hcst/errors.hpp"

namespace hcst {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : vertex_count_(vertex_count), adjacency_(vertex_count + 1) {
  if (vertex_count == 0) throw ArgumentError("graph needs at least one vertex");
  for (const Edge& raw : edges) {
    if (!contains(raw.u) || !contains(raw.v)) {
      throw ArgumentError("edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                          ") has an endpoint outside [1, " + std::to_string(vertex_count) + "]");
    }
    if (raw.u == raw.v) throw ArgumentError("self-loop at vertex " + std::to_string(raw.u));
    if (raw.cost < 0) throw ArgumentError("negative edge cost");
    const Edge e = canonical(raw);
    auto [it, inserted] = index_.try_emplace(key(e.u, e.v), edges_.size());
    if (inserted) {
      edges_.push_back(e);
      continue;
    }
    Edge& kept = edges_[it->second];
    const Cost smaller = std::min(kept.cost, e.cost);
    collapses_.push_back({e.u, e.v, std::max(kept.cost, e.cost), smaller});
    kept.cost = smaller;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[e.u].push_back({e.v, e.cost, i});
    adjacency_[e.v].push_back({e.u, e.cost, i});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Adjacent& a, const Adjacent& b) { return a.to < b.to; });
  }
}

std::optional<Cost> Graph::edge_cost(Vertex u, Vertex v) const {
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return edges_[it->second].cost;
}

Instance::Instance(std::shared_ptr<const Graph> graph, Vertex root, std::vector<Vertex> terminals,
                   int hop_limit)
    : graph_(std::move(graph)), root_(root), terminals_(std::move(terminals)), hop_limit_(hop_limit) {
  if (!graph_) throw ArgumentError("instance without a graph");
  if (!graph_->contains(root_)) throw ArgumentError("root " + std::to_string(root_) + " not in graph");
  if (hop_limit_ < 1) throw ArgumentError("hop limit must be at least 1");
  std::sort(terminals_.begin(), terminals_.end());
  terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
  terminal_mask_.assign(graph_->vertex_count() + 1, false);
  for (Vertex t : terminals_) {
    if (!graph_->contains(t)) throw ArgumentError("terminal " + std::to_string(t) + " not in graph");
    if (t == root_) throw ArgumentError("the root cannot be listed as a terminal");
    terminal_mask_[t] = true;
  }
}

bool Instance::is_terminal(Vertex v) const noexcept {
  return v < terminal_mask_.size() && terminal_mask_[v];
}

Instance Instance::with_hop_limit(int hop_limit) const {
  return Instance(graph_, root_, terminals_, hop_limit);
}

int SteinerTree::max_depth() const {
  int best = 0;
  for (const auto& [v, d] : depth) best = std::max(best, d);
  return best;
}

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  // Reads the next integer token; `what` names it in error messages.
  std::int64_t next(const char* what) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) throw ParseError(std::string("unexpected end of input, expected ") + what, pos_);
    last_ = pos_;
    bool negative = false;
    if (text_[pos_] == '-' || text_[pos_] == '+') {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::int64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
        throw ParseError(std::string("integer overflow in ") + what, last_);
      }
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0 || (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))) {
      throw ParseError(std::string("malformed token for ") + what, last_);
    }
    return negative ? -value : value;
  }

  bool at_end() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ >= text_.size();
  }
  std::size_t offset() const { return pos_; }
  std::size_t last() const { return last_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

}  // namespace

OrlibFile parse_orlib(std::string_view text) {
  Tokenizer tok(text);
  const std::int64_t n = tok.next("vertex count");
  if (n <= 0 || n > std::numeric_limits<Vertex>::max() / 2) throw ParseError("vertex count out of range", tok.last());
  const std::int64_t m = tok.next("edge count");
  if (m < 0) throw ParseError("negative edge count", tok.last());

  auto vertex = [&](const char* what) {
    const std::int64_t id = tok.next(what);
    if (id < 1 || id > n) {
      throw ParseError("vertex id " + std::to_string(id) + " outside [1, " + std::to_string(n) + "]",
                       tok.last());
    }
    return static_cast<Vertex>(id);
  };

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    const Vertex u = vertex("edge endpoint");
    const Vertex v = vertex("edge endpoint");
    const Cost c = tok.next("edge cost");
    if (c < 0) throw ParseError("negative edge cost", tok.last());
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), tok.last());
    edges.push_back({u, v, c});
  }
  const std::int64_t t = tok.next("terminal count");
  if (t < 0 || t > n) throw ParseError("terminal count out of range", tok.last());
  std::vector<Vertex> terminals;
  for (std::int64_t i = 0; i < t; ++i) terminals.push_back(vertex("terminal id"));
  if (!tok.at_end()) throw ParseError("trailing tokens after terminal list", tok.offset());

  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  return {std::make_shared<const Graph>(static_cast<std::size_t>(n), edges), std::move(terminals)};
}

OrlibFile read_orlib_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_orlib(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.offset());
  }
}

std::string write_orlib(const Graph& graph, std::span<const Vertex> terminals) {
  std::ostringstream out;
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << ' ' << e.cost << '\n';
  out << terminals.size() << '\n';
  for (std::size_t i = 0; i < terminals.size(); ++i) out << (i ? " " : "") << terminals[i];
  if (!terminals.empty()) out << '\n';
  return out.str();
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("empty sampling range");
  // Largest multiple of bound that fits; values at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::vector<Vertex> select_terminals(const Graph& graph, Vertex root, std::size_t count,
                                     std::uint64_t seed) {
  if (!graph.contains(root)) throw ArgumentError("root not in graph");
  if (count > graph.vertex_count() - 1) {
    throw ArgumentError("cannot select " + std::to_string(count) + " terminals from " +
                        std::to_string(graph.vertex_count() - 1) + " non-root vertices");
  }
  std::vector<Vertex> pool;
  pool.reserve(graph.vertex_count() - 1);
  for (Vertex v = 1; v <= graph.vertex_count(); ++v) {
    if (v != root) pool.push_back(v);
  }
  // Partial Fisher-Yates: the first `count` slots become the sample.
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

GraphDiagnostics validate_graph(const Graph& graph, Vertex root) {
  GraphDiagnostics report;
  report.collapses = graph.collapses();
  for (const Collapse& c : report.collapses) {
    report.warnings.push_back("duplicate edge (" + std::to_string(c.u) + "," + std::to_string(c.v) +
                              ") collapsed: kept cost " + std::to_string(c.kept_cost) +
                              ", dropped " + std::to_string(c.dropped_cost));
  }
  for (Vertex v = 1; v <= graph.vertex_count(); ++v) {
    if (graph.neighbors(v).empty() && graph.vertex_count() > 1) {
      report.isolated.push_back(v);
      report.warnings.push_back("isolated vertex " + std::to_string(v));
    }
  }
  if (!graph.contains(root)) {
    report.root_component_connected = false;
    report.warnings.push_back("root " + std::to_string(root) + " not in graph");
    return report;
  }
  std::vector<bool> seen(graph.vertex_count() + 1, false);
  std::queue<Vertex> frontier;
  frontier.push(root);
  seen[root] = true;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    ++report.root_component_size;
    for (const Adjacent& a : graph.neighbors(u)) {
      if (!seen[a.to]) {
        seen[a.to] = true;
        frontier.push(a.to);
      }
    }
  }
  report.root_component_connected = report.root_component_size == graph.vertex_count();
  if (!report.root_component_connected) {
    report.warnings.push_back("only " + std::to_string(report.root_component_size) + " of " +
                              std::to_string(graph.vertex_count()) +
                              " vertices are reachable from the root");
  }
  return report;
}

}  // namespace hcst
