#include "hcst/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "hcst/construction.hpp"
#include "hcst/errors.hpp"
#include "hcst/validation.hpp"

namespace hcst {

std::string instance_group(std::string_view instance_name) {
  std::string name(instance_name);
  for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name.starts_with("stein")) name = name.substr(5);
  static const std::set<std::string> sparse{"c5", "c10", "d5", "d10"};
  static const std::set<std::string> dense{"c15", "c20", "d15", "d20"};
  if (sparse.contains(name)) return "sparse";
  if (dense.contains(name)) return "dense";
  return std::string(instance_name);
}

InstanceEntry load_instance_file(const std::filesystem::path& path, Vertex root) {
  OrlibFile file = read_orlib_file(path.string());
  InstanceEntry entry;
  entry.name = path.stem().string();
  entry.group = instance_group(entry.name);
  entry.graph = std::move(file.graph);
  entry.root = root;
  return entry;
}

std::vector<InstanceEntry> load_instance_dir(const std::filesystem::path& dir, Vertex root) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.is_regular_file()) files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<InstanceEntry> entries;
  for (const auto& f : files) entries.push_back(load_instance_file(f, root));
  return entries;
}

std::uint64_t vector_seed(std::uint64_t base_seed, std::size_t index) { return base_seed + index; }

std::vector<std::vector<Vertex>> generate_vectors(const Graph& graph, Vertex root, int hop,
                                                  std::size_t terminal_count, std::uint64_t base_seed,
                                                  int multiplier) {
  if (hop < 1) throw ArgumentError("hop limit must be at least 1");
  if (multiplier < 1) throw ArgumentError("vector multiplier must be at least 1");
  if (terminal_count >= graph.vertex_count()) {
    throw ArgumentError("terminal count must be below the vertex count");
  }
  const std::size_t count = static_cast<std::size_t>(multiplier) * static_cast<std::size_t>(hop);
  std::vector<std::vector<Vertex>> vectors;
  vectors.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    vectors.push_back(select_terminals(graph, root, terminal_count, vector_seed(base_seed, i)));
  }
  return vectors;
}

namespace {

struct Task {
  std::size_t instance;
  int hop;
  std::uint64_t seed;
  std::vector<Vertex> terminals;
};

std::vector<RunRecord> run_task(const ExperimentConfig& config, const Task& task) {
  using Clock = std::chrono::steady_clock;
  const InstanceEntry& entry = config.instances[task.instance];
  const Instance instance(entry.graph, entry.root, task.terminals, task.hop);

  auto make = [&](Algorithm algorithm) {
    RunRecord r;
    r.instance = entry.name;
    r.group = entry.group;
    r.hop = task.hop;
    r.vector_seed = task.seed;
    r.algorithm = algorithm;
    return r;
  };
  auto elapsed = [](Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
  };

  std::vector<RunRecord> out;
  std::optional<GrowthState> growth;
  double growth_ms = 0.0;
  const auto start = Clock::now();
  try {
    growth = phase1_grow(instance);
  } catch (const InfeasibleInstance&) {
  }
  growth_ms = elapsed(start);

  for (Algorithm algorithm : config.algorithms) {
    RunRecord record = make(algorithm);
    if (growth) {
      const auto t0 = Clock::now();
      try {
        const SteinerTree tree = run_algorithm(algorithm, instance, *growth);
        record.runtime_ms = growth_ms + elapsed(t0);
        record.cost = tree.total_cost;
        record.feasible = check_feasible(tree, instance).pass();
      } catch (const SolverPostconditionError&) {
        record.runtime_ms = growth_ms + elapsed(t0);
      } catch (const StructureError&) {
        record.runtime_ms = growth_ms + elapsed(t0);
      }
    }
    if (!config.record_timing) record.runtime_ms = 0.0;
    out.push_back(std::move(record));
  }
  return out;
}

int algorithm_rank(Algorithm a) { return static_cast<int>(a); }

}  // namespace

std::vector<RunRecord> run_matrix(const ExperimentConfig& config) {
  if (config.algorithms.empty()) return {};
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < config.instances.size(); ++i) {
    const InstanceEntry& entry = config.instances[i];
    for (int hop : config.hops) {
      if (entry.fixed_terminals) {
        tasks.push_back({i, hop, 0, *entry.fixed_terminals});
        continue;
      }
      auto vectors = generate_vectors(*entry.graph, entry.root, hop, config.terminal_count,
                                      config.base_seed, config.multiplier);
      for (std::size_t k = 0; k < vectors.size(); ++k) {
        tasks.push_back({i, hop, vector_seed(config.base_seed, k), std::move(vectors[k])});
      }
    }
  }

  std::vector<std::vector<RunRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = run_task(config, tasks[k]);
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<RunRecord> records;
  for (auto& batch : results) {
    for (auto& r : batch) {
      if (r.feasible || config.keep_failures) records.push_back(std::move(r));
    }
  }
  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::make_tuple(a.instance, a.hop, a.vector_seed, algorithm_rank(a.algorithm)) <
           std::make_tuple(b.instance, b.hop, b.vector_seed, algorithm_rank(b.algorithm));
  });
  return records;
}

PairwiseStats pairwise_stats(std::span<const Cost> first, std::span<const Cost> second) {
  if (first.size() != second.size()) throw PairingError("cost arrays differ in length");
  PairwiseStats stats;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i] < second[i]) {
      ++stats.fos;
      stats.sfos += second[i] - first[i];
    } else if (second[i] < first[i]) {
      ++stats.sof;
      stats.ssof += first[i] - second[i];
    }
  }
  return stats;
}

PairwiseStats pairwise_stats(std::span<const RunRecord> first, std::span<const RunRecord> second) {
  using Key = std::tuple<std::string, int, std::uint64_t>;
  auto describe = [](const Key& k) {
    return std::get<0>(k) + "/H=" + std::to_string(std::get<1>(k)) + "/seed=" + std::to_string(std::get<2>(k));
  };
  auto index = [&](std::span<const RunRecord> records) {
    std::map<Key, Cost> costs;
    for (const RunRecord& r : records) {
      const Key key{r.instance, r.hop, r.vector_seed};
      if (!costs.emplace(key, r.cost).second) throw PairingError("duplicate record for " + describe(key));
    }
    return costs;
  };
  const auto a = index(first);
  const auto b = index(second);
  std::vector<Cost> left, right;
  for (const auto& [key, cost] : a) {
    auto it = b.find(key);
    if (it == b.end()) throw PairingError("no partner for " + describe(key));
    left.push_back(cost);
    right.push_back(it->second);
  }
  for (const auto& [key, cost] : b) {
    if (!a.contains(key)) throw PairingError("no partner for " + describe(key));
  }
  return pairwise_stats(left, right);
}

double improvement_pct(double voss_mean, double alg_mean) {
  if (!(voss_mean > 0.0)) throw ArgumentError("baseline mean must be positive");
  return 100.0 * (voss_mean - alg_mean) / voss_mean;
}

std::shared_ptr<const Graph> generate_random_graph(std::size_t vertex_count, std::size_t edge_count,
                                                   Cost min_cost, Cost max_cost, std::uint64_t seed) {
  if (vertex_count < 2) throw ArgumentError("random graph needs at least two vertices");
  if (min_cost < 0 || max_cost < min_cost) throw ArgumentError("bad cost range");
  const std::size_t max_edges = vertex_count * (vertex_count - 1) / 2;
  if (edge_count < vertex_count - 1 || edge_count > max_edges) {
    throw ArgumentError("edge count must lie in [n - 1, n(n - 1) / 2]");
  }
  SplitMix64 rng(seed);
  auto cost = [&] { return min_cost + static_cast<Cost>(rng.below(static_cast<std::uint64_t>(max_cost - min_cost) + 1)); };

  std::vector<Vertex> order(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) order[i] = static_cast<Vertex>(i + 1);
  for (std::size_t i = vertex_count - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

  std::set<std::pair<Vertex, Vertex>> present;
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (!present.insert({u, v}).second) return false;
    edges.push_back({u, v, cost()});
    return true;
  };
  for (std::size_t i = 1; i < vertex_count; ++i) add(order[i], order[rng.below(i)]);
  while (edges.size() < edge_count) {
    const Vertex u = static_cast<Vertex>(rng.below(vertex_count) + 1);
    const Vertex v = static_cast<Vertex>(rng.below(vertex_count) + 1);
    if (u != v) add(u, v);
  }
  return std::make_shared<const Graph>(vertex_count, edges);
}

}  // namespace hcst
