#pragma once

#include <cstdint>

#include "nia/benchmarks/holt_winters.hpp"
#include "nia/benchmarks/knapsack.hpp"
#include "nia/benchmarks/tsp.hpp"

namespace nia::bench {

/// Values and weights uniform integers in [1, 100]; W = ceil(tightness * sum w).
KnapsackInstance generate_knapsack(std::size_t n, std::uint64_t seed, double tightness = 0.5);

/// Cities uniform in the unit square.
TspInstance generate_tsp(std::size_t n, std::uint64_t seed, Metric metric = Metric::Euclidean);

/// Corners of the unit square in perimeter order.
TspInstance unit_square(Metric metric = Metric::Euclidean);

/// Positive seasonal series with a linear trend and multiplicative noise:
///   y_t = (100 + 0.5 t) * (1 + 0.3 sin(2 pi t / m)) * (1 + 0.03 z_t),  z_t ~ N(0,1)
TimeSeries generate_seasonal_series(std::uint64_t seed, int season_length = 12, int seasons = 10);

}  // namespace nia::bench
