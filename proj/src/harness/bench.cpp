#include "nia/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <Eigen/Dense>

#include "nia/algorithms/ga.hpp"
#include "nia/benchmarks/generators.hpp"
#include "nia/benchmarks/knapsack.hpp"
#include "nia/core/errors.hpp"
#include "nia/core/rng.hpp"

namespace nia::harness {

double median(std::vector<double> values) {
  if (values.empty()) throw InvalidParams("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size() / 2;
  return values.size() % 2 ? values[k] : 0.5 * (values[k - 1] + values[k]);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidParams("slope fit needs at least two paired points");
  const auto m = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(m, 2);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (!(x[k] > 0.0 && y[k] > 0.0)) throw InvalidParams("log-log fit needs positive data");
    a(i, 0) = std::log(x[k]);
    a(i, 1) = 1.0;
    b(i) = std::log(y[k]);
  }
  return a.colPivHouseholderQr().solve(b)(0);
}

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

TimingReport bench_ga_vs_dp(const BenchOptions& options) {
  if (options.sizes.empty()) throw InvalidParams("bench needs at least one size");
  if (options.repetitions < 1) throw InvalidParams("bench needs at least one repetition");
  if (options.ga_evaluations == 0) throw InvalidParams("GA budget must be positive");
  TimingReport report;
  report.tightness = options.tightness;
  report.repetitions = options.repetitions;
  report.seed = options.seed;
  report.ga_evaluations = options.ga_evaluations;

  const algo::GaParams ga;
  const auto budget = Budget::evaluations(options.ga_evaluations);
  std::vector<double> ns, dp_ms, ga_ms;
  for (std::size_t n : options.sizes) {
    const auto inst = bench::generate_knapsack(n, options.seed, options.tightness);
    const auto problem = bench::make_knapsack_problem(inst);

    bench::KnapsackSolution exact = bench::knapsack_dp(inst);  // warm-up
    std::vector<double> times;
    for (std::size_t r = 0; r < options.repetitions; ++r) {
      times.push_back(time_ms([&] { exact = bench::knapsack_dp(inst); }));
    }
    const double optimum = exact.value;
    TimingRow dp{n, inst.capacity, "dp", median(times), optimum, optimum, optimum > 0 ? std::optional(1.0) : std::nullopt};

    const std::uint64_t base = mix64(options.seed ^ (static_cast<std::uint64_t>(n) << 32));
    (void)algo::ga_run(problem, ga, budget, base);  // warm-up
    times.clear();
    std::vector<double> values;
    for (std::size_t r = 0; r < options.repetitions; ++r) {
      RunRecord rec;
      times.push_back(time_ms([&] { rec = algo::ga_run(problem, ga, budget, base + 1 + r); }));
      values.push_back(rec.best_fitness);
    }
    const double ga_value = median(values);
    TimingRow gr{n, inst.capacity, "ga", median(times), ga_value, optimum,
                 optimum > 0 ? std::optional(ga_value / optimum) : std::nullopt};

    ns.push_back(static_cast<double>(n));
    dp_ms.push_back(std::max(dp.median_ms, 1e-6));
    ga_ms.push_back(std::max(gr.median_ms, 1e-6));
    report.rows.push_back(std::move(dp));
    report.rows.push_back(std::move(gr));
  }
  if (ns.size() >= 2) {
    report.slopes["dp"] = loglog_slope(ns, dp_ms);
    report.slopes["ga"] = loglog_slope(ns, ga_ms);
  }
  return report;
}

}  // namespace nia::harness
