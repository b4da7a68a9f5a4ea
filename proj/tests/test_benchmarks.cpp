#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "nia/algorithms/aco.hpp"
#include "nia/benchmarks/generators.hpp"
#include "nia/benchmarks/holt_winters.hpp"
#include "nia/benchmarks/instance_io.hpp"
#include "nia/benchmarks/knapsack.hpp"
#include "nia/benchmarks/test_functions.hpp"
#include "nia/benchmarks/tsp.hpp"
#include "nia/core/errors.hpp"
#include "nia/core/rng.hpp"

using namespace nia;
using namespace nia::bench;

namespace {

KnapsackInstance make(std::vector<std::pair<double, std::int64_t>> items, std::int64_t cap) {
  KnapsackInstance k;
  for (auto [v, w] : items) k.items.push_back({v, w});
  k.capacity = cap;
  return k;
}

bool feasible(const KnapsackSolution& s, const KnapsackInstance& k) {
  std::int64_t w = 0;
  double v = 0;
  for (int i : s.items) {
    w += k.items[static_cast<std::size_t>(i)].weight;
    v += k.items[static_cast<std::size_t>(i)].value;
  }
  return w <= k.capacity && w == s.weight && v == s.value;
}

TspInstance square(Metric m, std::vector<std::array<double, 2>> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}}) {
  TspInstance t;
  t.metric = m;
  t.coords.resize(static_cast<Eigen::Index>(pts.size()), 2);
  for (std::size_t i = 0; i < pts.size(); ++i) t.coords.row(static_cast<Eigen::Index>(i)) << pts[i][0], pts[i][1];
  return t;
}

// Straight-line multiplicative Holt-Winters written independently of the
// library: plain arrays, 1-based season indexing.
double reference_sse(const std::vector<double>& y, int m, double a, double b, double g) {
  double mean1 = 0, mean2 = 0;
  for (int i = 0; i < m; ++i) {
    mean1 += y[i];
    mean2 += y[m + i];
  }
  mean1 /= m;
  mean2 /= m;
  double level = mean1;
  double trend = (mean2 - mean1) / m;
  std::vector<double> season(y.size());
  for (int i = 0; i < m; ++i) season[i] = y[i] / mean1;
  double sse = 0;
  for (std::size_t t = m; t < y.size(); ++t) {
    const double forecast = (level + trend) * season[t - m];
    if (t >= 2 * static_cast<std::size_t>(m)) sse += (y[t] - forecast) * (y[t] - forecast);
    const double prev = level;
    level = a * y[t] / season[t - m] + (1 - a) * (level + trend);
    trend = b * (level - prev) + (1 - b) * trend;
    season[t] = g * y[t] / level + (1 - g) * season[t - m];
  }
  return sse;
}

// Recorded from the library and confirmed by reference_sse.
constexpr double kSeed11Sse = 4235.0962462685002;

std::vector<double> as_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

// ---- knapsack ----

TEST(Knapsack, DpExamples) {
  auto s = knapsack_dp(make({{10, 5}}, 4));
  EXPECT_EQ(s.value, 0);
  EXPECT_TRUE(s.items.empty());
  s = knapsack_dp(make({{10, 5}}, 5));
  EXPECT_EQ(s.value, 10);
  EXPECT_EQ(s.items, std::vector<int>{0});
}

TEST(Knapsack, Seed42AgreesAcrossOracles) {
  const auto inst = generate_knapsack(12, 42);
  const auto dp = knapsack_dp(inst);
  // Independent exhaustive check over all 2^12 subsets.
  double best = 0;
  for (unsigned mask = 0; mask < (1u << 12); ++mask) {
    double v = 0;
    std::int64_t w = 0;
    for (unsigned i = 0; i < 12; ++i) {
      if (mask >> i & 1u) {
        v += inst.items[i].value;
        w += inst.items[i].weight;
      }
    }
    if (w <= inst.capacity) best = std::max(best, v);
  }
  EXPECT_EQ(dp.value, best);
  EXPECT_EQ(knapsack_brute_force(inst).value, best);
  EXPECT_EQ(knapsack_meet_in_middle(inst).value, best);
  EXPECT_LE(knapsack_greedy_dantzig(inst).value, best);
  EXPECT_TRUE(feasible(dp, inst));
}

TEST(Knapsack, BruteForceEdgeCases) {
  EXPECT_EQ(knapsack_brute_force(make({}, 10)).value, 0);
  EXPECT_EQ(knapsack_brute_force(make({{5, 11}, {7, 12}}, 10)).value, 0);
  EXPECT_THROW(knapsack_brute_force(generate_knapsack(26, 1)), TooLarge);
  EXPECT_THROW(knapsack_meet_in_middle(generate_knapsack(41, 1)), TooLarge);
}

TEST(Knapsack, GreedyExamples) {
  EXPECT_EQ(knapsack_greedy_dantzig(make({{6, 3}, {5, 5}}, 5)).value, 6);
  EXPECT_EQ(knapsack_dp(make({{6, 3}, {5, 5}}, 5)).value, 6);
  const auto k = make({{5, 4}, {3, 3}, {3, 3}}, 6);
  EXPECT_EQ(knapsack_greedy_dantzig(k).value, 5);
  EXPECT_EQ(knapsack_dp(k).value, 6);
}

TEST(Knapsack, MeetInMiddleExamples) {
  EXPECT_EQ(knapsack_meet_in_middle(make({{9, 3}}, 3)).value, 9);
  auto inst = generate_knapsack(20, 5);
  double total = 0;
  std::int64_t weight = 0;
  for (const auto& it : inst.items) {
    total += it.value;
    weight += it.weight;
  }
  inst.capacity = 10 * weight;
  EXPECT_EQ(knapsack_meet_in_middle(inst).value, total);
}

TEST(Knapsack, DpCapacityOverflow) {
  const auto inst = generate_knapsack(50, 1);
  EXPECT_THROW(knapsack_dp(inst, 100), CapacityOverflow);
}

TEST(Knapsack, InvalidInstances) {
  EXPECT_THROW(make({{1, 0}}, 3).validate(), InvalidInstance);
  EXPECT_THROW(make({{-1, 1}}, 3).validate(), InvalidInstance);
  EXPECT_THROW(make({{1, 1}}, -1).validate(), InvalidInstance);
}

TEST(Knapsack, OraclesAgreeAndGreedyBound) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto n = 1 + s % 20;
    const auto inst = generate_knapsack(n, s, 0.1 + 0.8 * static_cast<double>(s % 9) / 8.0);
    const auto dp = knapsack_dp(inst);
    const auto bf = knapsack_brute_force(inst);
    const auto mm = knapsack_meet_in_middle(inst);
    ASSERT_EQ(dp.value, bf.value);
    ASSERT_EQ(dp.value, mm.value);
    ASSERT_TRUE(feasible(dp, inst) && feasible(bf, inst) && feasible(mm, inst));
    const auto gr = knapsack_greedy_dantzig(inst);
    double vmax = 0;
    for (const auto& it : inst.items) vmax = std::max(vmax, it.value);
    EXPECT_TRUE(feasible(gr, inst));
    EXPECT_LE(gr.value, dp.value);
    EXPECT_LE(dp.value, gr.value + vmax);
  }
}

TEST(Knapsack, DecodeExamples) {
  auto inst = generate_knapsack(20, 42);
  EXPECT_EQ(knapsack_ga_decode(BitString(20, 0), inst).fitness.value(), 0);
  const auto heavy = knapsack_ga_decode(BitString(20, 1), inst);
  EXPECT_TRUE(heavy.feasible);
  EXPECT_LE(total_weight(std::get<BitString>(heavy.value), inst), inst.capacity);
  EXPECT_LE(heavy.fitness.value(), knapsack_dp(inst).value);
  double total = 0;
  for (const auto& it : inst.items) total += it.value;
  inst.capacity = 1'000'000;
  EXPECT_EQ(knapsack_ga_decode(BitString(20, 1), inst).fitness.value(), total);
}

TEST(Knapsack, RepairDropsWorstRatioFirst) {
  const auto inst = make({{10, 5}, {1, 5}, {8, 5}}, 10);
  BitString bits{1, 1, 1};
  repair_bitstring(bits, inst, repair_order(inst));
  EXPECT_EQ(bits, (BitString{1, 0, 1}));
}

TEST(Knapsack, RepairAlwaysFeasibleAndBounded) {
  Rng rng(9, 9);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto inst = generate_knapsack(30, s);
    const double opt = knapsack_dp(inst).value;
    BitString bits(30);
    for (auto& b : bits) b = rng.bernoulli(0.7);
    const auto sol = knapsack_ga_decode(bits, inst);
    EXPECT_LE(total_weight(std::get<BitString>(sol.value), inst), inst.capacity);
    EXPECT_LE(sol.fitness.value(), opt);
  }
}

// ---- TSP ----

TEST(Tsp, TourLengthExamples) {
  EXPECT_DOUBLE_EQ(tour_length({0, 1, 2, 3}, square(Metric::Euclidean)), 4.0);
  EXPECT_DOUBLE_EQ(tour_length({0, 1, 2, 3}, square(Metric::Manhattan)), 4.0);
  const auto crossing = square(Metric::Euclidean, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
  EXPECT_NEAR(tour_length({0, 1, 2, 3}, crossing), 2 + 2 * std::numbers::sqrt2, 1e-12);
  EXPECT_THROW(tour_length({0, 1, 1, 3}, square(Metric::Euclidean)), InvalidTour);
  EXPECT_THROW(tour_length({0, 1, 2}, square(Metric::Euclidean)), InvalidTour);
}

TEST(Tsp, ExactSolversOnSquareAndTriangle) {
  EXPECT_DOUBLE_EQ(tsp_brute_force(square(Metric::Euclidean)).length, 4.0);
  EXPECT_DOUBLE_EQ(tsp_branch_and_bound(square(Metric::Euclidean)).length, 4.0);
  const auto tri = generate_tsp(3, 4);
  const double cycle = tri.distance(0, 1) + tri.distance(1, 2) + tri.distance(2, 0);
  EXPECT_NEAR(tsp_brute_force(tri).length, cycle, 1e-12);
  EXPECT_NEAR(tsp_branch_and_bound(tri).length, cycle, 1e-12);
  EXPECT_THROW(tsp_brute_force(generate_tsp(11, 1)), TooLarge);
  EXPECT_THROW(generate_tsp(2, 1), InvalidInstance);
}

TEST(Tsp, Seed7N8Agreement) {
  const auto inst = generate_tsp(8, 7);
  const auto bf = tsp_brute_force(inst);
  const auto bb = tsp_branch_and_bound(inst);
  EXPECT_EQ(bb.status, SearchStatus::Complete);
  EXPECT_NEAR(bb.length, bf.length, 1e-9 * bf.length);
  EXPECT_NEAR(tour_length(bb.tour, inst), bb.length, 1e-12);
  EXPECT_EQ(bf.tour.front(), 0);
}

TEST(Tsp, BruteForceAndBranchAndBoundAgree) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto inst = generate_tsp(3 + s % 7, 500 + s, s % 2 ? Metric::Manhattan : Metric::Euclidean);
    const double bf = tsp_brute_force(inst).length;
    const auto bb = tsp_branch_and_bound(inst);
    ASSERT_EQ(bb.status, SearchStatus::Complete);
    ASSERT_NEAR(bb.length, bf, 1e-9 * bf);
  }
}

TEST(Tsp, Seed7N20Completes) {
  const auto inst = generate_tsp(20, 7);
  const auto bb = tsp_branch_and_bound(inst);
  EXPECT_EQ(bb.status, SearchStatus::Complete);
  const auto aco = algo::aco_run(inst, {}, Budget::iterations(2000), 7);
  EXPECT_LE(bb.length, aco.best_fitness * (1 + 1e-12));
  std::printf("n=20 seed 7: branch-and-bound %.9f (%llu nodes), ACO %.9f\n", bb.length,
              static_cast<unsigned long long>(bb.nodes), aco.best_fitness);
}

TEST(Tsp, TimeLimitGivesIncomplete) {
  const auto bb = tsp_branch_and_bound(generate_tsp(40, 3), std::chrono::milliseconds(1));
  EXPECT_EQ(bb.status, SearchStatus::Incomplete);
  EXPECT_TRUE(is_permutation_of_range(bb.tour));
}

TEST(Tsp, MetricProperties) {
  for (auto m : {Metric::Euclidean, Metric::Manhattan}) {
    const auto d = generate_tsp(30, 11, m).distance_matrix();
    for (Eigen::Index i = 0; i < 30; ++i) {
      EXPECT_EQ(d(i, i), 0.0);
      for (Eigen::Index j = 0; j < 30; ++j) {
        EXPECT_EQ(d(i, j), d(j, i));
        for (Eigen::Index k = 0; k < 30; ++k) ASSERT_LE(d(i, k), d(i, j) + d(j, k) + 1e-12);
      }
    }
  }
}

// ---- Holt-Winters ----

TEST(HoltWinters, ConstantSeriesHasZeroError) {
  TimeSeries s{Eigen::VectorXd::Constant(20, 5.0), 4};
  for (double a : {0.0, 0.3, 1.0}) {
    for (double g : {0.0, 0.7}) EXPECT_NEAR(hw_fit_sse(s, {a, 0.5, g}), 0.0, 1e-20);
  }
}

TEST(HoltWinters, ExactSeasonalSeriesAtZeroParams) {
  const double pattern[] = {0.8, 1.1, 1.3, 0.8};
  TimeSeries s{Eigen::VectorXd(24), 4};
  for (int t = 0; t < 24; ++t) s.values(t) = 50.0 * pattern[t % 4];
  EXPECT_NEAR(hw_fit_sse(s, {0, 0, 0}), 0.0, 1e-18);
}

TEST(HoltWinters, Seed11MatchesReference) {
  const auto s = generate_seasonal_series(11, 12, 10);
  const double sse = hw_fit_sse(s, {0.5, 0.1, 0.3});
  const double ref = reference_sse(as_vector(s.values), 12, 0.5, 0.1, 0.3);
  EXPECT_NEAR(sse, ref, 1e-9 * ref);
  EXPECT_NEAR(sse, kSeed11Sse, 1e-9 * kSeed11Sse);
}

TEST(HoltWinters, MatchesReferenceAcrossParams) {
  Rng rng(1, 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = generate_seasonal_series(seed, 4 + static_cast<int>(seed % 9), 5);
    const double a = rng.uniform(), b = rng.uniform(), g = rng.uniform();
    const double ref = reference_sse(as_vector(s.values), s.season_length, a, b, g);
    EXPECT_NEAR(hw_fit_sse(s, {a, b, g}), ref, 1e-9 * ref);
  }
}

TEST(HoltWinters, ScalingInvariance) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = generate_seasonal_series(seed);
    const HoltWintersParams p{0.2, 0.05 * static_cast<double>(seed), 0.4};
    const double base = hw_fit_sse(s, p);
    for (double c : {1e-3, 0.5, 7.0, 1e4}) {
      TimeSeries scaled{s.values * c, s.season_length};
      EXPECT_NEAR(hw_fit_sse(scaled, p) / (c * c), base, 1e-9 * base);
    }
  }
}

TEST(HoltWinters, Errors) {
  TimeSeries short_series{Eigen::VectorXd::Constant(7, 1.0), 4};
  EXPECT_THROW(hw_fit_sse(short_series, {}), TooShort);
  EXPECT_THROW(hw_grid_oracle(short_series), TooShort);
  TimeSeries negative{Eigen::VectorXd::Constant(8, 1.0), 4};
  negative.values(5) = -1;
  EXPECT_THROW(hw_fit_sse(negative, {}), NonPositiveSeries);
  TimeSeries ok{Eigen::VectorXd::Constant(8, 1.0), 4};
  EXPECT_THROW(hw_fit_sse(ok, {1.5, 0, 0}), OutOfBounds);
}

TEST(HoltWinters, GridOracle) {
  TimeSeries flat{Eigen::VectorXd::Constant(16, 3.0), 4};
  const auto g = hw_grid_oracle(flat);
  EXPECT_EQ(g.sse, 0.0);
  EXPECT_EQ(g.params.alpha, 0.0);
  EXPECT_EQ(g.params.beta, 0.0);
  EXPECT_EQ(g.params.gamma, 0.0);
  EXPECT_EQ(g.evaluations, 9261u);

  const auto s = generate_seasonal_series(11);
  const auto best = hw_grid_oracle(s);
  double brute = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      for (int k = 0; k <= 20; ++k) brute = std::min(brute, reference_sse(as_vector(s.values), 12, i / 20.0, j / 20.0, k / 20.0));
    }
  }
  EXPECT_NEAR(best.sse, brute, 1e-9 * brute);
}

// ---- test functions ----

TEST(TestFunctions, Optima) {
  EXPECT_EQ(test_function(TestFunction::Sphere, Eigen::VectorXd::Zero(4)), 0.0);
  EXPECT_NEAR(test_function(TestFunction::Rastrigin, Eigen::VectorXd::Zero(3)), 0.0, 1e-12);
  EXPECT_EQ(test_function(TestFunction::Rosenbrock, Eigen::VectorXd::Ones(2)), 0.0);
  EXPECT_EQ(test_function("sphere", Eigen::Vector2d(1, 2)), 5.0);
  EXPECT_THROW(test_function("ackley", Eigen::Vector2d(0, 0)), NotFound);
  EXPECT_THROW(test_function(TestFunction::Sphere, Eigen::Vector2d(6, 0)), OutOfBounds);
}

TEST(TestFunctions, TemplatesWorkOnFixedSizeAndFloat) {
  EXPECT_FLOAT_EQ(sphere(Eigen::Vector3f(1, 2, 2)), 9.0f);
  EXPECT_DOUBLE_EQ(rosenbrock(Eigen::Vector2d(0, 0)), 1.0);
  EXPECT_NEAR(rastrigin(Eigen::Matrix<double, 1, 1>(1.0)), 1.0, 1e-12);
}

// ---- generators and file formats ----

TEST(Generators, KnapsackShape) {
  const auto k = generate_knapsack(100, 3, 0.5);
  std::int64_t total = 0;
  for (const auto& it : k.items) {
    EXPECT_GE(it.value, 1);
    EXPECT_LE(it.value, 100);
    EXPECT_EQ(it.value, std::floor(it.value));
    EXPECT_GE(it.weight, 1);
    EXPECT_LE(it.weight, 100);
    total += it.weight;
  }
  EXPECT_EQ(k.capacity, (total + 1) / 2);
}

TEST(Generators, Deterministic) {
  std::ostringstream a, b, c;
  write_knapsack(a, generate_knapsack(30, 8));
  write_knapsack(b, generate_knapsack(30, 8));
  write_knapsack(c, generate_knapsack(30, 9));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str(), c.str());
  EXPECT_EQ(generate_tsp(10, 2).coords, generate_tsp(10, 2).coords);
  EXPECT_EQ(generate_seasonal_series(4).values, generate_seasonal_series(4).values);
  EXPECT_TRUE((generate_seasonal_series(4).values.array() > 0).all());
}

TEST(InstanceIo, KnapsackRoundTrip) {
  const auto k = generate_knapsack(17, 1);
  std::stringstream ss;
  write_knapsack(ss, k);
  const auto back = read_knapsack(ss);
  ASSERT_EQ(back.items.size(), 17u);
  EXPECT_EQ(back.capacity, k.capacity);
  for (std::size_t i = 0; i < 17; ++i) {
    EXPECT_EQ(back.items[i].value, k.items[i].value);
    EXPECT_EQ(back.items[i].weight, k.items[i].weight);
  }
  std::istringstream bad("2 10\n1 1\n");
  EXPECT_THROW(read_knapsack(bad), SchemaError);
}

TEST(InstanceIo, TsplibRoundTrip) {
  for (auto m : {Metric::Euclidean, Metric::Manhattan}) {
    const auto t = generate_tsp(12, 5, m);
    std::stringstream ss;
    write_tsplib(ss, t);
    const auto back = read_tsplib(ss);
    EXPECT_EQ(back.metric, m);
    EXPECT_EQ(back.coords, t.coords);
  }
  std::istringstream file(
      "NAME: square\nTYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
      "1 0 0\n2 1 0\n3 1 1\n4 0 1\nEOF\n");
  EXPECT_DOUBLE_EQ(tsp_brute_force(read_tsplib(file)).length, 4.0);
  std::istringstream geo("DIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\nNODE_COORD_SECTION\n1 0 0\n2 1 0\n3 1 1\nEOF\n");
  EXPECT_THROW(read_tsplib(geo), SchemaError);
}

TEST(InstanceIo, SeriesCsvAndSidecar) {
  const auto dir = std::filesystem::temp_directory_path() / "nia_io_test";
  std::filesystem::create_directories(dir);
  const auto csv = dir / "s.csv";
  const auto s = generate_seasonal_series(2, 6, 4);
  {
    std::ofstream f(csv);
    write_series_csv(f, s.values);
  }
  write_season_sidecar(csv, 6);
  const auto back = load_series(csv, std::nullopt);
  EXPECT_EQ(back.season_length, 6);
  EXPECT_EQ(back.values, s.values);
  EXPECT_EQ(load_series(csv, 3).season_length, 3);
  std::filesystem::remove_all(dir);
}
