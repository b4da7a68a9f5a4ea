#include "nia/benchmarks/generators.hpp"

#include <cmath>
#include <numbers>

#include "nia/core/rng.hpp"

namespace nia::bench {

namespace {
// Stream ids keep generators independent of solver streams for equal seeds.
constexpr std::uint64_t kKnapsackStream = 101;
constexpr std::uint64_t kTspStream = 102;
constexpr std::uint64_t kSeriesStream = 103;
}  // namespace

KnapsackInstance generate_knapsack(std::size_t n, std::uint64_t seed, double tightness) {
  Rng rng = rng_stream(seed, kKnapsackStream);
  KnapsackInstance inst;
  inst.items.reserve(n);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto value = static_cast<double>(rng.integer(1, 100));
    const auto weight = rng.integer(1, 100);
    inst.items.push_back({value, weight});
    total += weight;
  }
  inst.capacity = static_cast<std::int64_t>(std::ceil(tightness * static_cast<double>(total)));
  return inst;
}

TspInstance generate_tsp(std::size_t n, std::uint64_t seed, Metric metric) {
  Rng rng = rng_stream(seed, kTspStream);
  TspInstance inst;
  inst.metric = metric;
  inst.coords.resize(static_cast<Eigen::Index>(n), 2);
  for (Eigen::Index i = 0; i < inst.coords.rows(); ++i) {
    inst.coords(i, 0) = rng.uniform();
    inst.coords(i, 1) = rng.uniform();
  }
  inst.validate();
  return inst;
}

TspInstance unit_square(Metric metric) {
  TspInstance inst;
  inst.metric = metric;
  inst.coords.resize(4, 2);
  inst.coords << 0, 0, 1, 0, 1, 1, 0, 1;
  return inst;
}

TimeSeries generate_seasonal_series(std::uint64_t seed, int season_length, int seasons) {
  Rng rng = rng_stream(seed, kSeriesStream);
  TimeSeries s;
  s.season_length = season_length;
  s.values.resize(static_cast<Eigen::Index>(season_length) * seasons);
  for (Eigen::Index t = 0; t < s.values.size(); ++t) {
    const double td = static_cast<double>(t);
    const double seasonal = 1.0 + 0.3 * std::sin(2.0 * std::numbers::pi * td / season_length);
    s.values(t) = (100.0 + 0.5 * td) * seasonal * (1.0 + 0.03 * rng.normal());
  }
  return s;
}

}  // namespace nia::bench
