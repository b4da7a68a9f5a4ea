// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nia/algorithms/aco.hpp"
#include "nia/algorithms/ba.hpp"
#include "nia/algorithms/foa.hpp"
#include "nia/algorithms/ga.hpp"
#include "nia/benchmarks/generators.hpp"
#include "nia/benchmarks/holt_winters.hpp"
#include "nia/benchmarks/knapsack.hpp"
#include "nia/benchmarks/test_functions.hpp"
#include "nia/benchmarks/tsp.hpp"
#include "nia/core/optimizer.hpp"
#include "nia/core/rng.hpp"
#include "nia/harness/bench.hpp"
#include "nia/harness/report.hpp"
#include "nia/taxonomy/recommender.hpp"

using namespace nia;

namespace {

// Pinned tolerances and thresholds.
constexpr int kKnapsackInstances = 200;
constexpr int kKnapsackMaxN = 20;
constexpr double kKnapsackSeconds = 30.0;
constexpr int kTspInstances = 100;
constexpr int kTspMaxN = 9;
constexpr double kTspRelTol = 1e-9;
constexpr double kTspSeconds = 60.0;
constexpr double kBenchSeconds = 600.0;
constexpr std::size_t kBenchReps = 3;
constexpr int kGaRuns = 100;
constexpr std::uint64_t kGaEvals = 50'000;
constexpr int kGaSmallHits = 90;
constexpr double kGaLargeRatio = 0.95;
constexpr int kGaLargeHits = 90;
constexpr int kAcoRuns = 100;
constexpr std::uint64_t kAcoIterations = 100;
constexpr int kAcoHits = 80;
constexpr int kAcoSquareHits = 99;
constexpr double kSquareTol = 1e-9;
constexpr int kSphereRuns = 100;
constexpr std::uint64_t kSphereEvals = 10'000;
constexpr double kSphereTarget = 1e-3;
constexpr int kFoaSphereHits = 95;
constexpr int kBaSphereHits = 90;
constexpr int kHwSeries = 20;
constexpr double kHwSseFactor = 1.10;
constexpr double kHwEvalFraction = 0.20;
constexpr double kProbTol = 1e-12;
constexpr double kScaleRelTol = 1e-9;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void knapsack_oracles() {
  const auto t0 = std::chrono::steady_clock::now();
  int agree = 0;
  for (int i = 0; i < kKnapsackInstances; ++i) {
    const auto n = static_cast<std::size_t>(1 + i % kKnapsackMaxN);
    const auto inst = bench::generate_knapsack(n, 1000 + static_cast<std::uint64_t>(i), 0.2 + 0.6 * (i % 7) / 6.0);
    const double dp = bench::knapsack_dp(inst).value;
    const double bf = bench::knapsack_brute_force(inst).value;
    const double mitm = bench::knapsack_meet_in_middle(inst).value;
    agree += (dp == bf && bf == mitm);
  }
  const double s = seconds_since(t0);
  report(1, agree == kKnapsackInstances && s < kKnapsackSeconds,
         fmt("knapsack DP/brute/MITM agree on %d/%d instances (n<=%d) in %.2fs", agree, kKnapsackInstances, kKnapsackMaxN, s));
}

void tsp_oracles() {
  const auto t0 = std::chrono::steady_clock::now();
  int agree = 0;
  for (int i = 0; i < kTspInstances; ++i) {
    const auto n = static_cast<std::size_t>(3 + i % (kTspMaxN - 2));
    const auto metric = i % 2 ? bench::Metric::Manhattan : bench::Metric::Euclidean;
    const auto inst = bench::generate_tsp(n, 2000 + static_cast<std::uint64_t>(i), metric);
    const double bf = bench::tsp_brute_force(inst).length;
    const auto bb = bench::tsp_branch_and_bound(inst);
    agree += bb.status == bench::SearchStatus::Complete && std::abs(bf - bb.length) <= kTspRelTol * bf;
  }
  const double s = seconds_since(t0);
  report(2, agree == kTspInstances && s < kTspSeconds,
         fmt("TSP brute/branch-and-bound agree on %d/%d instances (n<=%d) in %.2fs", agree, kTspInstances, kTspMaxN, s));
}

void bench_slopes(const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  harness::BenchOptions opts;
  opts.sizes = {100, 200, 400, 800};
  opts.tightness = 0.5;
  opts.repetitions = kBenchReps;
  opts.seed = 7;
  const auto rep = harness::bench_ga_vs_dp(opts);
  const double s = seconds_since(t0);
  harness::emit_report(rep, harness::ReportFormat::Json, out_dir + "/ga_vs_dp.json");
  harness::emit_report(rep, harness::ReportFormat::Csv, out_dir + "/ga_vs_dp.csv");
  const double dp = rep.slopes.at("dp"), ga = rep.slopes.at("ga");
  report(3, ga < dp && s < kBenchSeconds,
         fmt("log-log slope GA %.3f < DP %.3f (sizes 100..800, rho 0.5, %zu reps) in %.1fs", ga, dp, kBenchReps, s));
}

void ga_quality() {
  const algo::GaParams defaults;
  int small_hits = 0, large_hits = 0;
  double worst_ratio = 1.0;
  for (int i = 0; i < kGaRuns; ++i) {
    const auto seed = 3000 + static_cast<std::uint64_t>(i);
    const auto small = bench::generate_knapsack(15, seed);
    const double opt15 = bench::knapsack_dp(small).value;
    const auto r15 = algo::ga_run(bench::make_knapsack_problem(small), defaults, Budget::evaluations(kGaEvals), seed);
    small_hits += r15.best_fitness == opt15;

    const auto large = bench::generate_knapsack(100, seed);
    const double opt100 = bench::knapsack_dp(large).value;
    const auto r100 = algo::ga_run(bench::make_knapsack_problem(large), defaults, Budget::evaluations(kGaEvals), seed);
    const double ratio = r100.best_fitness / opt100;
    worst_ratio = std::min(worst_ratio, ratio);
    large_hits += ratio >= kGaLargeRatio;
  }
  report(4, small_hits >= kGaSmallHits && large_hits >= kGaLargeHits,
         fmt("GA n=15 optimal in %d/%d (need %d); n=100 >=95%% of optimum in %d/%d (need %d), worst ratio %.4f",
             small_hits, kGaRuns, kGaSmallHits, large_hits, kGaRuns, kGaLargeHits, worst_ratio));
}

void aco_quality() {
  const algo::AcoParams defaults;
  int hits = 0, square_hits = 0;
  const auto square = bench::unit_square();
  for (int i = 0; i < kAcoRuns; ++i) {
    const auto seed = 4000 + static_cast<std::uint64_t>(i);
    const auto inst = bench::generate_tsp(8, seed);
    const double opt = bench::tsp_brute_force(inst).length;
    const auto r = algo::aco_run(inst, defaults, Budget::iterations(kAcoIterations), seed);
    hits += std::abs(r.best_fitness - opt) <= kTspRelTol * opt;
    const auto rs = algo::aco_run(square, defaults, Budget::iterations(kAcoIterations), seed);
    square_hits += std::abs(rs.best_fitness - 4.0) <= kSquareTol;
  }
  report(5, hits >= kAcoHits && square_hits >= kAcoSquareHits,
         fmt("ACO n=8 optimal in %d/%d (need %d); unit square 4.0 in %d/%d (need %d); %llu iterations",
             hits, kAcoRuns, kAcoHits, square_hits, kAcoRuns, kAcoSquareHits,
             static_cast<unsigned long long>(kAcoIterations)));
}

void sphere_quality() {
  const auto problem = bench::make_test_problem(bench::TestFunction::Sphere, 2);
  int foa_hits = 0, ba_hits = 0;
  for (int i = 0; i < kSphereRuns; ++i) {
    const auto seed = 5000 + static_cast<std::uint64_t>(i);
    foa_hits += algo::foa_run(problem, {}, Budget::evaluations(kSphereEvals), seed).best_fitness < kSphereTarget;
    ba_hits += algo::ba_run(problem, {}, Budget::evaluations(kSphereEvals), seed).best_fitness < kSphereTarget;
  }
  report(6, foa_hits >= kFoaSphereHits && ba_hits >= kBaSphereHits,
         fmt("sphere 2D < 1e-3 within %llu evals: FOA %d/%d (need %d), BA %d/%d (need %d)",
             static_cast<unsigned long long>(kSphereEvals), foa_hits, kSphereRuns, kFoaSphereHits, ba_hits, kSphereRuns,
             kBaSphereHits));
}

void holt_winters_fit() {
  int ok = 0;
  double worst = 0.0;
  std::uint64_t max_evals = 0, oracle_evals = 0;
  for (int i = 0; i < kHwSeries; ++i) {
    const auto seed = 6000 + static_cast<std::uint64_t>(i);
    const auto series = bench::generate_seasonal_series(seed, 12, 10);
    const auto grid = bench::hw_grid_oracle(series);
    oracle_evals = grid.evaluations;
    const auto budget = static_cast<std::uint64_t>(kHwEvalFraction * static_cast<double>(grid.evaluations));
    const auto r = algo::foa_run(bench::make_hw_problem(series), {}, Budget::evaluations(budget), seed);
    const double factor = r.best_fitness / grid.sse;
    worst = std::max(worst, factor);
    max_evals = std::max(max_evals, r.evaluations);
    ok += factor <= kHwSseFactor && r.evaluations <= budget;
  }
  report(7, ok == kHwSeries,
         fmt("FOA Holt-Winters SSE <= 1.10x grid on %d/%d series; worst ratio %.4f; max %llu evals vs grid %llu", ok,
             kHwSeries, worst, static_cast<unsigned long long>(max_evals), static_cast<unsigned long long>(oracle_evals)));
}

void taxonomy_fidelity() {
  // Every table row: (name as printed, path).
  const std::vector<std::pair<const char*, const char*>> rows = {
      {"Antlion Optimizer", "Biology/ResourceSeeking/FoodSeeking/Hunting"},
      {"Bat algorithm", "Biology/ResourceSeeking/FoodSeeking/Hunting"},
      {"Grey wolf optimizer", "Biology/ResourceSeeking/FoodSeeking/Hunting"},
      {"Lion Optimization Algorithm", "Biology/ResourceSeeking/FoodSeeking/Hunting"},
      {"Salp swarm algorithm", "Biology/ResourceSeeking/FoodSeeking/Hunting"},
      {"Whale optimization algorithm", "Biology/ResourceSeeking/FoodSeeking/Hunting"},
      {"Animal Migration Optimization", "Biology/ResourceSeeking/FoodSeeking/Migration"},
      {"Artificial Algea Algorithm (AAA)", "Biology/ResourceSeeking/FoodSeeking/Migration"},
      {"Ant Colony optimization", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"Artificial Bee Colony Algorithm", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"Artificial Fish swarm optimization", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"chicken swarm optimization", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"Dragonfly Algorithm", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"Fruit fly optimization algorithm", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"Gross hoper optimization", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"krill herd algorithm", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"Locust search algorithm", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"Particle swarm optimization algorithm", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"Strawberry algorithm", "Biology/ResourceSeeking/FoodSeeking/HerdBehavior"},
      {"Monarch butterfly optimization", "Biology/ResourceSeeking/HabitatSeeking/HerdBehavior"},
      {"Moth flame optimization algorithm", "Biology/ResourceSeeking/HabitatSeeking/HerdBehavior"},
      {"Sperm swarm optimization", "Biology/ResourceSeeking/HabitatSeeking/HerdBehavior"},
      {"Artificial Immune system", "Biology/Survival/Self"},
      {"Dendritic Cell Algorithm", "Biology/Survival/Self"},
      {"Gross hoper optimization", "Biology/Survival/Self"},
      {"Cuckoo Search", "Biology/Survival/Offspring"},
      {"Emperor penguins colony", "Biology/Survival/Offspring"},
      {"Tree physiology optimization", "Biology/Survival/Dependant"},
      {"Elephant herd optimization", "Biology/Reproduction/MatingSearching"},
      {"Firefly Algorithm", "Biology/Reproduction/MatingSearching"},
      {"Honey bee mating optimization", "Biology/Reproduction/MatingSearching"},
      {"Social spider optimization", "Biology/Reproduction/MatingSearching"},
      {"Artificial Eco System with Species", "Biology/Reproduction/Evolution"},
      {"Bacterial Evolutionary Algorithm", "Biology/Reproduction/Evolution"},
      {"Bird mating optimizer", "Biology/Reproduction/Evolution"},
      {"Bull optimization algorithm", "Biology/Reproduction/Evolution"},
      {"Bumble bees mating algorithm", "Biology/Reproduction/Evolution"},
      {"Coral reefs optimization", "Biology/Reproduction/Evolution"},
      {"Differencial evolution", "Biology/Reproduction/Evolution"},
      {"Evolutionary Programming", "Biology/Reproduction/Evolution"},
      {"Evolution Strategies", "Biology/Reproduction/Evolution"},
      {"Genetic Algorithm", "Biology/Reproduction/Evolution"},
      {"Memetic algorithm", "Biology/Reproduction/Evolution"},
      {"Flower Pollination Algorithm", "Biology/Reproduction/Pollination"},
      {"Forest optimization algorithm", "Biology/Reproduction/Pollination"},
      {"Black Hole Algorithm", "NonBiology/Gravity"},
      {"Central force optimization", "NonBiology/Gravity"},
      {"Gravitation search algorithm", "NonBiology/Gravity"},
      {"Artificial Chemical Process Optimization Algorithm", "NonBiology/EntropyReduction"},
      {"Intelligent Water drop algorithm", "NonBiology/EntropyReduction"},
      {"Harmony search", "NonBiology/LawOfEquilibrium"},
      {"Water wave optimization", "NonBiology/LawOfEquilibrium"},
      {"wind driven optimation", "NonBiology/LawOfEquilibrium"},
  };
  const auto tax = taxonomy::Taxonomy::bundled();
  std::set<const taxonomy::TaxonomyEntry*> seen;
  int placed = 0;
  for (const auto& [name, path] : rows) {
    const auto* e = tax.find(name);
    if (!e) continue;
    seen.insert(e);
    for (const auto& p : e->paths) placed += p.to_string() == path;
  }
  const bool coverage = placed == static_cast<int>(rows.size()) && seen.size() == tax.entries().size();

  const auto rules = taxonomy::RuleTable::bundled(tax);
  struct Case {
    std::vector<std::string> tags;
    const char* expected;
  };
  const std::vector<Case> cases = {
      {{"parameter-search", "continuous", "team-search", "data-scarce"}, "Fruit fly optimization algorithm"},
      {{"packing", "combinatorial-subset"}, "Genetic Algorithm"},
      {{"route-finding", "combinatorial-permutation", "team-search"}, "Ant Colony optimization"},
  };
  int top3 = 0;
  for (const auto& c : cases) {
    const auto rec = taxonomy::triz_map(rules.parse_descriptor(c.tags), tax, rules);
    for (std::size_t i = 0; i < rec.ranked.size() && i < 3; ++i) top3 += rec.ranked[i].entry->name == c.expected;
  }
  report(8, coverage && top3 == 3,
         fmt("%zu table rows resolve to %zu distinct entries (dataset has %zu), %d rows on their path; worked mappings in top 3: %d/3",
             rows.size(), seen.size(), tax.entries().size(), placed, top3));
}

void determinism() {
  struct Run {
    const char* name;
    std::function<RunRecord()> run;
  };
  const auto knap = bench::make_knapsack_problem(bench::generate_knapsack(40, 11));
  const auto tsp_inst = bench::generate_tsp(12, 11);
  const auto tsp = bench::make_tsp_problem(tsp_inst);
  const auto sphere = bench::make_test_problem(bench::TestFunction::Rastrigin, 3);
  const auto hw = bench::make_hw_problem(bench::generate_seasonal_series(11));
  const std::vector<Run> runs = {
      {"ga/knapsack", [&] { return algo::ga_run(knap, {}, Budget::evaluations(5000), 9); }},
      {"ga/tsp", [&] { return algo::ga_run(tsp, {}, Budget::evaluations(5000), 9); }},
      {"ga/real", [&] { return algo::ga_run(sphere, {}, Budget::evaluations(5000), 9); }},
      {"aco/tsp", [&] { return algo::aco_run(tsp_inst, {}, Budget::iterations(50), 9); }},
      {"foa/real", [&] { return algo::foa_run(sphere, {}, Budget::evaluations(5000), 9); }},
      {"foa/hw", [&] { return algo::foa_run(hw, {}, Budget::evaluations(1500), 9); }},
      {"ba/real", [&] { return algo::ba_run(sphere, {}, Budget::evaluations(5000), 9); }},
  };
  int same = 0;
  std::string bad;
  for (const auto& r : runs) {
    const auto a = r.run(), b = r.run();
    if (same_trace(a, b)) ++same;
    else bad += std::string(" ") + r.name;
  }
  report(9, same == static_cast<int>(runs.size()),
         fmt("%d/%zu solver configurations reproduce identical best solutions and histories%s", same, runs.size(),
             bad.empty() ? "" : (" (differs:" + bad + ")").c_str()));
}

bool monotone(const RunRecord& r) {
  for (std::size_t i = 1; i < r.history.size(); ++i) {
    if (r.history[i].first < r.history[i - 1].first) return false;
    if (!strictly_better(r.sense, r.history[i].second, r.history[i - 1].second)) return false;
  }
  return r.history.empty() || r.history.back().second == r.best_fitness;
}

void properties() {
  std::vector<std::string> failed;
  auto check = [&](const char* name, bool ok) {
    if (!ok) failed.emplace_back(name);
  };

  // Monotone best-so-far.
  bool mono = true;
  for (std::uint64_t s = 0; s < 10; ++s) {
    mono &= monotone(algo::ga_run(bench::make_knapsack_problem(bench::generate_knapsack(30, s)), {}, Budget::evaluations(3000), s));
    mono &= monotone(algo::aco_run(bench::generate_tsp(10, s), {}, Budget::iterations(20), s));
    const auto rast = bench::make_test_problem(bench::TestFunction::Rastrigin, 2);
    mono &= monotone(algo::foa_run(rast, {}, Budget::evaluations(2000), s));
    mono &= monotone(algo::ba_run(rast, {}, Budget::evaluations(2000), s));
  }
  check("monotone best-so-far", mono);

  // Permutation closure under OX and swap mutation.
  bool closed = true;
  Rng rng(17, 0);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(rng.below(30));
    Permutation a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] = i;
    rng.shuffle(std::span<int>(a));
    rng.shuffle(std::span<int>(b));
    auto c = algo::order_crossover(a, b, rng);
    closed &= is_permutation_of_range(c);
    algo::swap_mutation(c, 0.3, rng);
    closed &= is_permutation_of_range(c);
  }
  check("permutation closure", closed);

  // Pheromone floor and symmetry across many updates.
  bool floor_sym = true;
  {
    const auto inst = bench::generate_tsp(9, 5);
    const auto d = inst.distance_matrix();
    algo::AcoParams p;
    p.rho = 0.9;
    algo::PheromoneMatrix tau(9, 1.0, p.tau_min);
    for (int it = 0; it < 200; ++it) {
      Permutation tour(9);
      for (int i = 0; i < 9; ++i) tour[static_cast<std::size_t>(i)] = i;
      rng.shuffle(std::span<int>(tour));
      const std::vector<algo::ScoredTour> tours{{tour, bench::tour_length(tour, d)}};
      algo::aco_update_pheromone(tau, tours, p);
      floor_sym &= (tau.values().array() >= p.tau_min).all();
      floor_sym &= (tau.values().array() == tau.values().transpose().array()).all();
    }
  }
  check("pheromone floor/symmetry", floor_sym);

  // Transition probabilities sum to one.
  bool normalized = true;
  {
    const auto inst = bench::generate_tsp(15, 6);
    const auto d = inst.distance_matrix();
    algo::PheromoneMatrix tau(15, 1.0, 1e-3);
    for (int i = 0; i < 15; ++i) {
      for (int j = i + 1; j < 15; ++j) tau.set(i, j, 0.01 + rng.uniform());
    }
    for (int t = 0; t < 200; ++t) {
      std::vector<int> unvisited;
      for (int j = 1; j < 15; ++j) {
        if (rng.bernoulli(0.6)) unvisited.push_back(j);
      }
      if (unvisited.empty()) continue;
      algo::AcoParams ap;
      ap.alpha = 1.0 + rng.uniform();
      ap.beta = 1.0 + 3 * rng.uniform();
      const auto p = algo::aco_transition_probability(0, unvisited, tau, d, ap);
      normalized &= std::abs(p.sum() - 1.0) <= kProbTol && (p.array() >= 0).all();
    }
  }
  check("probability normalization", normalized);

  // Holt-Winters scaling invariance.
  bool scaling = true;
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto series = bench::generate_seasonal_series(s);
    const bench::HoltWintersParams hp{0.1 + 0.08 * s, 0.05 * s, 0.3};
    const double base = bench::hw_fit_sse(series, hp);
    for (double c : {0.01, 3.0, 1234.5}) {
      bench::TimeSeries scaled = series;
      scaled.values *= c;
      const double v = bench::hw_fit_sse(scaled, hp) / (c * c);
      scaling &= std::abs(v - base) <= kScaleRelTol * base;
    }
  }
  check("HW scaling invariance", scaling);

  // Metric symmetry and triangle inequality.
  bool metric = true;
  for (auto m : {bench::Metric::Euclidean, bench::Metric::Manhattan}) {
    const auto inst = bench::generate_tsp(25, 8, m);
    const auto d = inst.distance_matrix();
    for (Eigen::Index i = 0; i < 25; ++i) {
      for (Eigen::Index j = 0; j < 25; ++j) {
        metric &= d(i, j) == d(j, i);
        for (Eigen::Index k = 0; k < 25; ++k) metric &= d(i, k) <= d(i, j) + d(j, k) + 1e-12;
      }
    }
  }
  check("metric symmetry/triangle", metric);

  std::string detail = "6/6 property families hold";
  if (!failed.empty()) {
    detail = "failed:";
    for (const auto& f : failed) detail += " " + f + ";";
  }
  report(10, failed.empty(), detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_dir = argc > 1 ? argv[1] : ".";
  knapsack_oracles();
  tsp_oracles();
  bench_slopes(out_dir);
  ga_quality();
  aco_quality();
  sphere_quality();
  holt_winters_fit();
  taxonomy_fidelity();
  determinism();
  properties();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
