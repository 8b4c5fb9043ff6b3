// hcst: command line front end for the hop-constrained Steiner tree toolkit.
//
//   hcst solve    --instance FILE --hop H [--root N] [--terminals 2,5,9 | --terminal-count K --seed S]
//                 --algo {voss|minhig|maxhig|mm|nrbi} [--out json|text]
//   hcst bench    --instances DIR --hops 3,5,7,10 --terminal-count K --seed S [--multiplier 100]
//                 --algos voss,minhig,maxhig,mm,nrbi --out DIR [--threads N]
//   hcst validate --instance FILE --tree TREE.json --hop H
//   hcst oracle   --instance FILE --hop H [--cap 12]
//   hcst fixtures --name {fig1|fig2|fig3}

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcst/bench.hpp"
#include "hcst/construction.hpp"
#include "hcst/errors.hpp"
#include "hcst/heuristics.hpp"
#include "hcst/validation.hpp"

namespace {

using namespace hcst;
using nlohmann::json;

struct InstanceArgs {
  std::string file;
  int hop = 0;
  Vertex root = 1;
  std::vector<Vertex> terminals;
  std::size_t terminal_count = 0;
  std::uint64_t seed = 1;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args, bool sampling) {
  cmd->add_option("--instance", args.file, "OR-Library instance file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--hop", args.hop, "hop limit H")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--root", args.root, "root vertex")->check(CLI::PositiveNumber);
  auto* list = cmd->add_option("--terminals", args.terminals, "terminal ids (default: the file's list)")
                   ->delimiter(',');
  if (sampling) {
    auto* count = cmd->add_option("--terminal-count", args.terminal_count, "sample this many terminals");
    cmd->add_option("--seed", args.seed, "sampling seed");
    list->excludes(count);
  }
}

Instance make_instance(const InstanceArgs& args) {
  OrlibFile file = read_orlib_file(args.file);
  std::vector<Vertex> terminals;
  if (!args.terminals.empty()) {
    terminals = args.terminals;
  } else if (args.terminal_count > 0) {
    terminals = select_terminals(*file.graph, args.root, args.terminal_count, args.seed);
  } else {
    for (Vertex t : file.terminals) {
      if (t != args.root) terminals.push_back(t);
    }
  }
  return Instance(file.graph, args.root, std::move(terminals), args.hop);
}

json tree_to_json(const SteinerTree& tree, const std::string& instance, std::string_view algo, int hop,
                  bool feasible) {
  json edges = json::array();
  for (const Edge& e : tree.edges) edges.push_back({e.u, e.v, e.cost});
  json depths = json::object();
  for (const auto& [v, d] : tree.depth) depths[std::to_string(v)] = d;
  return json{{"instance", instance}, {"algo", algo},     {"hop", hop},           {"cost", tree.total_cost},
              {"edges", edges},       {"depths", depths}, {"feasible", feasible}};
}

SteinerTree tree_from_json(const json& doc) {
  SteinerTree tree;
  for (const auto& e : doc.at("edges")) {
    tree.edges.push_back(canonical({e.at(0).get<Vertex>(), e.at(1).get<Vertex>(), e.at(2).get<Cost>()}));
  }
  tree.total_cost = doc.at("cost").get<Cost>();
  if (doc.contains("depths")) {
    for (const auto& [k, d] : doc.at("depths").items()) {
      const Vertex v = static_cast<Vertex>(std::stoul(k));
      tree.vertices.push_back(v);
      tree.depth[v] = d.get<int>();
    }
  }
  return tree;
}

void print_report(const FeasibilityReport& report, std::ostream& out) {
  out << "feasible: " << (report.pass() ? "yes" : "no") << "\n"
      << "is_tree: " << report.is_tree << "\nconnected: " << report.connected
      << "\nspans_terminals: " << report.spans_terminals << "\nmax_depth: " << report.max_depth
      << "\nhop_feasible: " << report.hop_feasible << "\n";
  for (const auto& v : report.violations) out << "violation: " << v << "\n";
}

int run_solve(const InstanceArgs& args, const std::string& algo_name, const std::string& format) {
  const Algorithm algo = parse_algorithm(algo_name);
  const Instance instance = make_instance(args);
  GrowthState growth;
  try {
    growth = phase1_grow(instance);
  } catch (const InfeasibleInstance& e) {
    if (format == "json") {
      std::cout << json{{"instance", args.file}, {"algo", to_string(algo)}, {"hop", args.hop},
                        {"feasible", false}, {"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cout << "infeasible: " << e.what() << "\n";
    }
    return 2;
  }
  const SteinerTree tree = run_algorithm(algo, instance, growth);
  const FeasibilityReport report = check_feasible(tree, instance);
  if (format == "json") {
    std::cout << tree_to_json(tree, args.file, to_string(algo), args.hop, report.pass()).dump(2) << "\n";
  } else {
    std::cout << "algorithm: " << to_string(algo) << "\ncost: " << tree.total_cost << "\nedges:\n";
    for (const Edge& e : tree.edges) std::cout << "  " << e.u << " " << e.v << " " << e.cost << "\n";
    std::cout << "depths:\n";
    for (const auto& [v, d] : tree.depth) std::cout << "  " << v << " " << d << "\n";
    print_report(report, std::cout);
  }
  return report.pass() ? 0 : 1;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hop-constrained Steiner tree heuristics"};
  app.require_subcommand(1);

  InstanceArgs solve_args;
  std::string algo = "nrbi";
  std::string format = "text";
  auto* solve = app.add_subcommand("solve", "run one heuristic on one instance");
  add_instance_options(solve, solve_args, true);
  solve->add_option("--algo", algo, "voss|minhig|maxhig|mm|nrbi")->required();
  solve->add_option("--out", format, "json|text")->check(CLI::IsMember({"json", "text"}));

  std::string bench_dir, bench_out, hops_text = "3,5,7,10", algos_text = "voss,minhig,maxhig,mm,nrbi";
  ExperimentConfig bench_config;
  Vertex bench_root = 1;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "run the full experiment matrix and write reports");
  bench->add_option("--instances", bench_dir, "directory of OR-Library files")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--hops", hops_text, "comma separated hop limits");
  bench->add_option("--terminal-count", bench_config.terminal_count, "terminals per vector")->required();
  bench->add_option("--seed", bench_config.base_seed, "base seed for terminal vectors")->required();
  bench->add_option("--multiplier", bench_config.multiplier, "vectors per hop unit")->check(CLI::PositiveNumber);
  bench->add_option("--algos", algos_text, "comma separated algorithms");
  bench->add_option("--out", bench_out, "output directory")->required();
  bench->add_option("--threads", bench_config.threads, "worker threads");
  bench->add_option("--root", bench_root, "root vertex")->check(CLI::PositiveNumber);
  bench->add_flag("--keep-failures", bench_config.keep_failures, "keep records of infeasible runs");
  bench->add_flag("--no-timing", no_timing, "write runtime_ms as 0");

  InstanceArgs validate_args;
  std::string tree_file;
  auto* validate = app.add_subcommand("validate", "check a tree JSON file against an instance");
  add_instance_options(validate, validate_args, false);
  validate->add_option("--tree", tree_file, "tree JSON as written by solve --out json")->required()->check(CLI::ExistingFile);

  InstanceArgs oracle_args;
  std::size_t cap = kDefaultOracleCap;
  auto* oracle = app.add_subcommand("oracle", "exact optimum by enumeration (small instances only)");
  add_instance_options(oracle, oracle_args, true);
  oracle->add_option("--cap", cap, "largest vertex count accepted");

  std::string fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "print a worked-example instance in OR-Library format");
  fixtures->add_option("--name", fixture_name, "fig1|fig2|fig3")->required()->check(CLI::IsMember({"fig1", "fig2", "fig3"}, CLI::ignore_case));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(solve_args, algo, format);

    if (*bench) {
      bench_config.hops = parse_int_list(hops_text);
      for (const auto& name : CLI::detail::split(algos_text, ',')) {
        if (!name.empty()) bench_config.algorithms.push_back(parse_algorithm(name));
      }
      if (bench_config.algorithms.empty()) throw ArgumentError("no algorithms selected");
      bench_config.record_timing = !no_timing;
      bench_config.instances = load_instance_dir(bench_dir, bench_root);
      const auto records = run_matrix(bench_config);
      const ReportPaths paths = emit_reports(records, bench_config, bench_out);
      std::cout << "wrote " << records.size() << " records\n"
                << paths.runs.string() << "\n" << paths.pairwise.string() << "\n"
                << paths.summary.string() << "\n" << paths.manifest.string() << "\n";
      return 0;
    }

    if (*validate) {
      const Instance instance = make_instance(validate_args);
      std::ifstream in(tree_file);
      const SteinerTree tree = tree_from_json(json::parse(in));
      const FeasibilityReport report = check_feasible(tree, instance);
      print_report(report, std::cout);
      return report.pass() ? 0 : 1;
    }

    if (*oracle) {
      const Instance instance = make_instance(oracle_args);
      const ExactResult result = exact_hcst(instance, cap);
      if (!result.feasible()) {
        std::cout << "infeasible\n";
        return 2;
      }
      std::cout << "optimum: " << result.optimal_cost() << "\nedges:\n";
      for (const Edge& e : result.tree->edges) std::cout << "  " << e.u << " " << e.v << " " << e.cost << "\n";
      return 0;
    }

    if (*fixtures) {
      const Instance instance = load_fixture(*fixture_from_name(fixture_name));
      std::cout << write_orlib(instance.graph(), instance.terminals());
      std::cerr << "root " << instance.root() << ", hop limit " << instance.hop_limit() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
