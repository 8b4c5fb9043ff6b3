#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcst/heuristics.hpp"
#include "hcst/instance.hpp"

namespace hcst {

inline constexpr std::string_view kVersion = "1.0.0";

struct RunRecord {
  std::string instance;
  std::string group;
  int hop = 0;
  std::uint64_t vector_seed = 0;
  Algorithm algorithm = Algorithm::kVoss;
  Cost cost = 0;
  bool feasible = false;
  double runtime_ms = 0.0;
};

// First algorithm vs second: win counts and summed cost margins.
struct PairwiseStats {
  std::int64_t fos = 0;  // times the first is strictly cheaper
  Cost sfos = 0;         // sum of (second - first) over those
  std::int64_t sof = 0;  // times the second is strictly cheaper
  Cost ssof = 0;         // sum of (first - second) over those

  friend bool operator==(const PairwiseStats&, const PairwiseStats&) = default;
};

struct InstanceEntry {
  std::string name;
  std::string group;
  std::shared_ptr<const Graph> graph;
  Vertex root = 1;
  // When set, every hop runs exactly this terminal set (vector seed 0).
  std::optional<std::vector<Vertex>> fixed_terminals;
};

struct ExperimentConfig {
  std::vector<InstanceEntry> instances;
  std::vector<int> hops;
  std::size_t terminal_count = 200;
  std::uint64_t base_seed = 1;
  std::vector<Algorithm> algorithms;
  int multiplier = 100;  // vectors per (instance, hop) = multiplier * H
  unsigned threads = 1;
  bool keep_failures = false;
  bool record_timing = true;
};

// sparse = {c5, c10, d5, d10}, dense = {c15, c20, d15, d20}; anything else keeps its own name.
std::string instance_group(std::string_view instance_name);
InstanceEntry load_instance_file(const std::filesystem::path& path, Vertex root = 1);
// Every regular file in `dir`, sorted by name.
std::vector<InstanceEntry> load_instance_dir(const std::filesystem::path& dir, Vertex root = 1);

std::uint64_t vector_seed(std::uint64_t base_seed, std::size_t index);
std::vector<std::vector<Vertex>> generate_vectors(const Graph& graph, Vertex root, int hop,
                                                  std::size_t terminal_count, std::uint64_t base_seed,
                                                  int multiplier = 100);

// Runs every (instance, hop, vector) through the growth phase once and then
// through each requested algorithm. Output is sorted by
// (instance, hop, vector_seed, algorithm) and does not depend on `threads`.
std::vector<RunRecord> run_matrix(const ExperimentConfig& config);

// Pairs records on (instance, hop, vector_seed). Throws PairingError on a key
// present on only one side.
PairwiseStats pairwise_stats(std::span<const RunRecord> first, std::span<const RunRecord> second);
// Index-paired cost arrays of equal length.
PairwiseStats pairwise_stats(std::span<const Cost> first, std::span<const Cost> second);

// 100 * (voss_mean - alg_mean) / voss_mean.
double improvement_pct(double voss_mean, double alg_mean);

struct ReportPaths {
  std::filesystem::path runs;
  std::filesystem::path pairwise;
  std::filesystem::path summary;
  std::filesystem::path manifest;
};

ReportPaths emit_reports(std::span<const RunRecord> records, const ExperimentConfig& config,
                         const std::filesystem::path& out_dir);

// Connected random graph: a random spanning tree plus uniformly drawn extra
// edges, integer costs uniform in [min_cost, max_cost].
std::shared_ptr<const Graph> generate_random_graph(std::size_t vertex_count, std::size_t edge_count,
                                                   Cost min_cost, Cost max_cost, std::uint64_t seed);

}  // namespace hcst
