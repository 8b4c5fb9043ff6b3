// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// usage: acceptance [path-to-hcst-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>

#include "hcst/bench.hpp"
#include "hcst/construction.hpp"
#include "hcst/errors.hpp"
#include "hcst/heuristics.hpp"
#include "hcst/validation.hpp"
#include "support.hpp"

using namespace hcst;
using hcst::testing::fx;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body, double limit_s) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= limit_s) {
    out.pass = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  if (!out.pass) ++failures;
  std::printf("[%s] %d. %s (%.2fs) %s\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), elapsed,
              out.detail.c_str());
  std::fflush(stdout);
}

Cost run(Algorithm a, const Instance& instance, const GrowthState& g) {
  return run_algorithm(a, instance, g).total_cost;
}

std::string expect(const char* what, Cost got, Cost want) {
  return std::string(what) + " = " + std::to_string(got) + " (want " + std::to_string(want) + ")";
}

Outcome fig1() {
  Outcome out;
  const Instance fig = load_fixture(Fixture::kFig1);
  const GrowthState g = phase1_grow(fig);
  const Cost voss = run(Algorithm::kVoss, fig, g), min = run(Algorithm::kMinHig, fig, g);
  const Cost mm = run(Algorithm::kMm, fig, g), opt = exact_hcst(fig).optimal_cost();
  out.require(voss == 15, expect("voss", voss, 15));
  out.require(min == 10, expect("minhig", min, 10));
  out.require(mm == 10, expect("mm", mm, 10));
  out.require(opt == 10, expect("optimum", opt, 10));
  out.require(g.u(hcst::testing::r) == 0, "U label of the root");
  const std::pair<int, int> labels[] = {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 3}};
  for (auto [label, u] : labels) {
    out.require(g.u(fx(label)) == u, "U label of vertex " + std::to_string(label));
  }
  out.detail = out.pass ? "voss 15, minhig 10, mm 10, optimum 10, U labels match" : out.detail;
  return out;
}

Outcome fig2() {
  Outcome out;
  const Instance fig = load_fixture(Fixture::kFig2);
  const GrowthState g = phase1_grow(fig);
  const Cost min = run(Algorithm::kMinHig, fig, g), max = run(Algorithm::kMaxHig, fig, g);
  const Cost mm = run(Algorithm::kMm, fig, g), opt = exact_hcst(fig).optimal_cost();
  out.require(min == 19, expect("minhig", min, 19));
  out.require(max == 10, expect("maxhig", max, 10));
  out.require(mm == 10, expect("mm", mm, 10));
  out.require(opt == 10, expect("optimum", opt, 10));
  out.detail = out.pass ? "minhig 19, maxhig 10, mm 10, optimum 10" : out.detail;
  return out;
}

Outcome fig3() {
  Outcome out;
  const Instance fig = load_fixture(Fixture::kFig3);
  const GrowthState g = phase1_grow(fig);
  const Cost voss = run(Algorithm::kVoss, fig, g), min = run(Algorithm::kMinHig, fig, g);
  const Cost max = run(Algorithm::kMaxHig, fig, g), nrbi = run(Algorithm::kNrbi, fig, g);
  const Cost opt = exact_hcst(fig).optimal_cost();
  out.require(voss == 31, expect("voss", voss, 31));
  out.require(min == 31, expect("minhig", min, 31));
  out.require(max == 31, expect("maxhig", max, 31));
  out.require(nrbi == 30, expect("nrbi", nrbi, 30));
  out.require(opt == 30, expect("optimum", opt, 30));
  const std::pair<int, int> labels[] = {{2, 1}, {7, 2}, {5, 3}};
  for (auto [label, itr] : labels) {
    const auto it = g.itr_label.find(fx(label));
    out.require(it != g.itr_label.end() && it->second == itr, "itr label of vertex " + std::to_string(label));
  }
  out.detail = out.pass ? "voss 31, minhig 31, maxhig 31, nrbi 30, optimum 30, itr labels match" : out.detail;
  return out;
}

Outcome oracle_properties() {
  Outcome out;
  SplitMix64 rng(20240501);
  int solved = 0, phase1_infeasible = 0, oracle_infeasible = 0, trials = 0;
  while (solved < 600) {
    ++trials;
    const auto c = hcst::testing::random_small_instance(rng, 10);
    const ExactResult exact = exact_hcst(c.instance);
    GrowthState g;
    try {
      g = phase1_grow(c.instance);
    } catch (const InfeasibleInstance&) {
      ++phase1_infeasible;
      if (!exact.feasible()) ++oracle_infeasible;
      continue;
    }
    if (!exact.feasible()) {
      out.require(false, "growth succeeded where the oracle found no tree (seed " + std::to_string(c.seed) + ")");
      continue;
    }
    ++solved;
    std::map<Algorithm, Cost> cost;
    for (Algorithm a : kAllAlgorithms) {
      const SteinerTree tree = run_algorithm(a, c.instance, g);
      cost[a] = tree.total_cost;
      if (!check_feasible(tree, c.instance).pass()) {
        out.require(false, std::string(to_string(a)) + " infeasible (seed " + std::to_string(c.seed) + ")");
      }
      if (tree.total_cost < exact.optimal_cost()) {
        out.require(false, std::string(to_string(a)) + " below optimum (seed " + std::to_string(c.seed) + ")");
      }
    }
    if (cost[Algorithm::kMm] != std::min(cost[Algorithm::kMinHig], cost[Algorithm::kMaxHig])) {
      out.require(false, "mm != min(minhig, maxhig) (seed " + std::to_string(c.seed) + ")");
    }
    if (cost[Algorithm::kNrbi] > cost[Algorithm::kVoss]) {
      out.require(false, "nrbi above voss (seed " + std::to_string(c.seed) + ")");
    }
  }
  if (out.pass) {
    out.detail = std::to_string(solved) + " instances checked (" + std::to_string(trials) + " drawn, " +
                 std::to_string(phase1_infeasible) + " without a growth tree, " +
                 std::to_string(oracle_infeasible) + " of them with no feasible tree at all)";
  }
  return out;
}

Outcome imp_formula() {
  Outcome out;
  const double a = improvement_pct(92.91, 89.80);
  const double b = improvement_pct(361.05, 235.907);
  out.require(std::abs(a - 3.34) <= 0.01, "first value " + std::to_string(a));
  out.require(std::abs(b - 34.6) <= 0.1, "second value " + std::to_string(b));
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "%.4f and %.4f", a, b);
  if (out.pass) out.detail = buffer;
  return out;
}

Outcome pairwise_algebra() {
  Outcome out;
  SplitMix64 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng.below(200);
    std::vector<Cost> a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = static_cast<Cost>(rng.below(50));
      b[k] = rng.below(4) == 0 ? a[k] : static_cast<Cost>(rng.below(50));
    }
    const PairwiseStats ab = pairwise_stats(a, b), ba = pairwise_stats(b, a), aa = pairwise_stats(a, a);
    if (ab.fos != ba.sof || ab.sfos != ba.ssof || ab.sof != ba.fos || ab.ssof != ba.sfos) {
      out.require(false, "asymmetric stats on array " + std::to_string(i));
    }
    if (!(aa == PairwiseStats{})) out.require(false, "non-zero self stats on array " + std::to_string(i));
  }
  if (out.pass) out.detail = "1000 random arrays";
  return out;
}

Outcome directional_trend() {
  Outcome out;
  auto graph = generate_random_graph(200, 5000, 1, 100, 2026);
  const int vectors = 60;
  std::map<int, double> imp;
  for (int hop : {3, 10}) {
    double voss_sum = 0, nrbi_sum = 0;
    int used = 0;
    for (int k = 0; k < vectors; ++k) {
      const Instance instance(graph, 1, select_terminals(*graph, 1, 50, 1000 + k), hop);
      GrowthState g;
      try {
        g = phase1_grow(instance);
      } catch (const InfeasibleInstance&) {
        continue;
      }
      voss_sum += static_cast<double>(run(Algorithm::kVoss, instance, g));
      nrbi_sum += static_cast<double>(run(Algorithm::kNrbi, instance, g));
      ++used;
    }
    out.require(used >= 50, "only " + std::to_string(used) + " feasible vectors at H=" + std::to_string(hop));
    imp[hop] = improvement_pct(voss_sum / used, nrbi_sum / used);
  }
  out.require(imp[10] > imp[3], "Imp at H=10 does not exceed Imp at H=3");
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "nrbi Imp%% H=3 %.3f, H=10 %.3f over %d vectors", imp[3], imp[10], vectors);
  out.detail = out.pass ? std::string(buffer) : out.detail + " [" + buffer + "]";
  return out;
}

Outcome performance() {
  Outcome out;
  auto graph = generate_random_graph(500, 12500, 1, 100, 500);
  const Instance instance(graph, 1, select_terminals(*graph, 1, 200, 1), 10);
  const auto start = Clock::now();
  const GrowthState g = phase1_grow(instance);
  std::string detail;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "growth %.2fs", seconds_since(start));
  detail = buffer;
  for (Algorithm a : kAllAlgorithms) {
    const auto t0 = Clock::now();
    const SteinerTree tree = run_algorithm(a, instance, g);
    std::snprintf(buffer, sizeof buffer, ", %s %.2fs", std::string(to_string(a)).c_str(), seconds_since(t0));
    detail += buffer;
    out.require(check_feasible(tree, instance).pass(), std::string(to_string(a)) + " infeasible");
  }
  out.require(seconds_since(start) < 60.0, "slower than 60 s");
  out.detail = out.pass ? detail : out.detail + " [" + detail + "]";
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// runs.csv with the last (runtime) column removed.
std::string without_runtime(const std::string& csv) {
  std::istringstream in(csv);
  std::string out;
  for (std::string line; std::getline(in, line);) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty() || !std::filesystem::exists(cli)) {
    out.require(false, "cli binary not given or missing");
    return out;
  }
  const auto root = std::filesystem::temp_directory_path() / "hcst_acceptance_determinism";
  std::filesystem::remove_all(root);
  std::filesystem::create_directories(root / "instances");
  const std::pair<const char*, std::uint64_t> files[] = {{"steinc5", 1}, {"steinc15", 2}, {"steind5", 3}};
  for (auto [name, seed] : files) {
    auto graph = generate_random_graph(120, 600 + 400 * seed, 1, 60, seed);
    std::ofstream(root / "instances" / (std::string(name) + ".txt")) << write_orlib(*graph, {});
  }

  auto bench = [&](const std::string& tag, unsigned threads, bool timing) {
    const auto dir = root / tag;
    std::ostringstream cmd;
    cmd << '"' << cli << "\" bench --instances \"" << (root / "instances").string()
        << "\" --hops 3,5 --terminal-count 25 --seed 41 --multiplier 4 --algos voss,minhig,maxhig,mm,nrbi"
        << " --threads " << threads << (timing ? "" : " --no-timing") << " --out \"" << dir.string()
        << "\" > \"" << (root / (tag + ".log")).string() << "\" 2>&1";
    if (std::system(cmd.str().c_str()) != 0) out.require(false, "bench run " + tag + " failed");
    return dir;
  };

  const auto a = bench("a", 4, true), b = bench("b", 4, true), c = bench("c", 1, true);
  const auto d = bench("d", 4, false), e = bench("e", 3, false);
  for (const auto& other : {b, c}) {
    for (const char* file : {"pairwise.csv", "summary.csv"}) {
      out.require(slurp(a / file) == slurp(other / file), std::string(file) + " differs in " + other.filename().string());
    }
    out.require(without_runtime(slurp(a / "runs.csv")) == without_runtime(slurp(other / "runs.csv")),
                "runs.csv differs outside runtime_ms in " + other.filename().string());
  }
  for (const char* file : {"runs.csv", "pairwise.csv", "summary.csv", "manifest.json"}) {
    out.require(slurp(d / file) == slurp(e / file), std::string(file) + " differs between untimed runs");
  }
  out.require(!slurp(a / "pairwise.csv").empty(), "empty pairwise.csv");
  if (out.pass) {
    out.detail = "pairwise/summary byte-identical across 3 timed runs (threads 4, 4, 1); "
                 "all four files byte-identical across untimed runs (threads 4, 3)";
    std::filesystem::remove_all(root);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  report(1, "FIG1 golden", fig1, 1.0);
  report(2, "FIG2 golden", fig2, 1.0);
  report(3, "FIG3 golden", fig3, 1.0);
  report(4, "oracle property suite", oracle_properties, 300.0);
  report(5, "Imp formula", imp_formula, 1.0);
  report(6, "pairwise stats algebra", pairwise_algebra, 60.0);
  report(7, "directional trend on a dense instance", directional_trend, 600.0);
  report(8, "performance envelope", performance, 60.0);
  report(9, "bench determinism", [&] { return determinism(cli); }, 600.0);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
