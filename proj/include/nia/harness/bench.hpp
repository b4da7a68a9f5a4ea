#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nia::harness {

struct TimingRow {
  std::size_t n = 0;
  std::int64_t capacity = 0;
  std::string algorithm;  // "dp" or "ga"
  double median_ms = 0.0;
  double best_value = 0.0;
  std::optional<double> optimum;
  /// best_value / optimum; unset without an oracle.
  std::optional<double> ratio;

  friend bool operator==(const TimingRow&, const TimingRow&) = default;
};

struct TimingReport {
  std::vector<TimingRow> rows;
  /// Fitted log-log slope of median time against n, per algorithm (needs >= 2 sizes).
  std::map<std::string, double> slopes;
  double tightness = 0.5;
  std::size_t repetitions = 0;
  std::uint64_t seed = 0;
  std::uint64_t ga_evaluations = 0;

  friend bool operator==(const TimingReport&, const TimingReport&) = default;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  double tightness = 0.5;
  std::size_t repetitions = 5;
  std::uint64_t seed = 1;
  /// Fixed GA budget, independent of n.
  std::uint64_t ga_evaluations = 50'000;
};

/// DP versus GA on seeded knapsack instances with W = ceil(rho * sum w).
/// Each (size, algorithm) cell runs one untimed warm-up, then `repetitions`
/// timed runs on a steady clock; the median is reported. Cells always run
/// serially. CapacityOverflow from the DP propagates.
TimingReport bench_ga_vs_dp(const BenchOptions& options);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

double median(std::vector<double> values);

}  // namespace nia::harness
