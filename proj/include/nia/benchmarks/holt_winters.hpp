#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "nia/core/problem.hpp"

namespace nia::bench {

/// Strictly positive observations with a season length m >= 2 and at least
/// two full seasons.
struct TimeSeries {
  Eigen::VectorXd values;
  int season_length = 12;

  /// Throws TooShort or NonPositiveSeries.
  void validate() const;
};

struct HoltWintersParams {
  double alpha = 0.0;  // level
  double beta = 0.0;   // trend
  double gamma = 0.0;  // season
};

/// Sum of squared one-step-ahead errors of multiplicative Holt-Winters.
///
/// Initialization (0-based t, season length m):
///   level  = mean(y[0..m)),  trend = (mean(y[m..2m)) - mean(y[0..m))) / m,
///   s[i]   = y[i] / level for i < m.
/// Recursions for t = m, m+1, ...:
///   yhat_t = (l + b) * s[t-m]
///   l_t = alpha * y_t / s[t-m] + (1 - alpha) * (l + b)
///   b_t = beta * (l_t - l) + (1 - beta) * b
///   s_t = gamma * y_t / l_t + (1 - gamma) * s[t-m]
/// The second season warms the state up; errors are summed for t >= 2m.
double hw_fit_sse(const TimeSeries& series, const HoltWintersParams& params);

struct HwGridResult {
  HoltWintersParams params;
  double sse = 0.0;
  std::uint64_t evaluations = 0;
};

/// Exhaustive grid over alpha, beta, gamma in {0, step, ..., 1}; strict
/// improvement only, so ties keep the lexicographically smallest triple.
HwGridResult hw_grid_oracle(const TimeSeries& series, double step = 0.05);

/// RealVector [0,1]^3 problem (alpha, beta, gamma) minimizing hw_fit_sse.
/// The cube centre is supplied as the initial point: random starts near
/// alpha = 0 strand local searchers in a valley where beta barely matters.
Problem make_hw_problem(const TimeSeries& series);

}  // namespace nia::bench
