#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "hcst/bench.hpp"
#include "hcst/errors.hpp"

namespace hcst {

namespace {

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

using VectorKey = std::tuple<std::string, int, std::uint64_t>;

}  // namespace

ReportPaths emit_reports(std::span<const RunRecord> records, const ExperimentConfig& config,
                         const std::filesystem::path& out_dir) {
  if (config.algorithms.empty()) throw ArgumentError("no algorithms selected");
  if (records.empty()) throw ArgumentError("no run records to report");

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (!std::filesystem::is_directory(out_dir)) throw std::runtime_error("cannot create " + out_dir.string());

  std::vector<Algorithm> algorithms;
  for (Algorithm a : kAllAlgorithms) {
    if (std::find(config.algorithms.begin(), config.algorithms.end(), a) != config.algorithms.end()) {
      algorithms.push_back(a);
    }
  }

  ReportPaths paths{out_dir / "runs.csv", out_dir / "pairwise.csv", out_dir / "summary.csv",
                    out_dir / "manifest.json"};

  {
    auto out = open_for_write(paths.runs);
    out << "instance,hop,vector_seed,algo,cost,feasible,runtime_ms\n";
    for (const RunRecord& r : records) {
      out << r.instance << ',' << r.hop << ',' << r.vector_seed << ',' << to_string(r.algorithm) << ','
          << r.cost << ',' << (r.feasible ? "true" : "false") << ',' << fixed(r.runtime_ms, 3) << '\n';
    }
  }

  // Only vectors on which every requested algorithm succeeded take part in comparisons.
  std::map<VectorKey, std::map<Algorithm, const RunRecord*>> by_vector;
  for (const RunRecord& r : records) {
    if (r.feasible) by_vector[{r.instance, r.hop, r.vector_seed}][r.algorithm] = &r;
  }
  // (group, hop) -> algorithm -> records in vector order
  std::map<std::pair<std::string, int>, std::map<Algorithm, std::vector<RunRecord>>> cells;
  std::size_t excluded = 0;
  for (const auto& [key, runs] : by_vector) {
    if (runs.size() != algorithms.size()) {
      ++excluded;
      continue;
    }
    for (const auto& [algorithm, record] : runs) {
      cells[{record->group, record->hop}][algorithm].push_back(*record);
    }
  }

  {
    auto out = open_for_write(paths.pairwise);
    out << "group,hop,algo_a,algo_b,fos,sfos,sof,ssof\n";
    for (const auto& [cell, runs] : cells) {
      for (Algorithm a : algorithms) {
        for (Algorithm b : algorithms) {
          if (a == b) continue;
          const PairwiseStats s = pairwise_stats(runs.at(a), runs.at(b));
          out << cell.first << ',' << cell.second << ',' << to_string(a) << ',' << to_string(b) << ','
              << s.fos << ',' << s.sfos << ',' << s.sof << ',' << s.ssof << '\n';
        }
      }
    }
  }

  {
    auto out = open_for_write(paths.summary);
    out << "group,hop,algo,mean_cost,imp_pct_vs_voss\n";
    for (const auto& [cell, runs] : cells) {
      std::map<Algorithm, double> mean;
      for (Algorithm a : algorithms) {
        const auto& list = runs.at(a);
        double sum = 0.0;
        for (const RunRecord& r : list) sum += static_cast<double>(r.cost);
        mean[a] = sum / static_cast<double>(list.size());
      }
      for (Algorithm a : algorithms) {
        out << cell.first << ',' << cell.second << ',' << to_string(a) << ',' << fixed(mean[a], 3) << ',';
        if (mean.contains(Algorithm::kVoss) && mean[Algorithm::kVoss] > 0.0) {
          out << fixed(improvement_pct(mean[Algorithm::kVoss], mean[a]), 2);
        }
        out << '\n';
      }
    }
  }

  {
    nlohmann::ordered_json manifest;
    manifest["software"] = "hcst";
    manifest["version"] = std::string(kVersion);
    nlohmann::ordered_json instances = nlohmann::ordered_json::array();
    for (const InstanceEntry& e : config.instances) {
      nlohmann::ordered_json item{{"name", e.name},
                                  {"group", e.group},
                                  {"vertices", e.graph->vertex_count()},
                                  {"edges", e.graph->edge_count()},
                                  {"root", e.root}};
      if (e.fixed_terminals) item["fixed_terminals"] = *e.fixed_terminals;
      instances.push_back(std::move(item));
    }
    manifest["instances"] = std::move(instances);
    manifest["hops"] = config.hops;
    manifest["terminal_count"] = config.terminal_count;
    manifest["base_seed"] = config.base_seed;
    manifest["vector_seeds"] = "base_seed + k for k in [0, multiplier * hop)";
    manifest["multiplier"] = config.multiplier;
    std::vector<std::string> names;
    for (Algorithm a : algorithms) names.emplace_back(to_string(a));
    manifest["algorithms"] = names;
    manifest["keep_failures"] = config.keep_failures;
    manifest["record_timing"] = config.record_timing;
    manifest["records"] = records.size();
    manifest["paired_vectors"] = by_vector.size() - excluded;
    manifest["excluded_vectors"] = excluded;
    auto out = open_for_write(paths.manifest);
    out << manifest.dump(2) << '\n';
  }
  return paths;
}

}  // namespace hcst
