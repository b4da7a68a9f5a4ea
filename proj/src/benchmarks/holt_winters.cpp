#include "nia/benchmarks/holt_winters.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "nia/core/errors.hpp"

namespace nia::bench {

void TimeSeries::validate() const {
  if (season_length < 2) throw TooShort("season length must be >= 2");
  if (values.size() < 2 * static_cast<Eigen::Index>(season_length)) {
    throw TooShort("series needs at least two full seasons");
  }
  if (!values.allFinite() || (values.array() <= 0.0).any()) {
    throw NonPositiveSeries("multiplicative Holt-Winters needs strictly positive observations");
  }
}

double hw_fit_sse(const TimeSeries& series, const HoltWintersParams& params) {
  series.validate();
  const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(params.alpha) || !in_unit(params.beta) || !in_unit(params.gamma)) {
    throw OutOfBounds("smoothing parameters must lie in [0,1]");
  }
  const Eigen::VectorXd& y = series.values;
  const Eigen::Index m = series.season_length;
  const double first_mean = y.head(m).mean();
  const double second_mean = y.segment(m, m).mean();

  double level = first_mean;
  double trend = (second_mean - first_mean) / static_cast<double>(m);
  // Ring buffer of the last m seasonal factors; slot t % m holds s[t-m].
  Eigen::VectorXd season = y.head(m) / first_mean;

  double sse = 0.0;
  for (Eigen::Index t = m; t < y.size(); ++t) {
    const Eigen::Index slot = t % m;
    const double s_prev = season(slot);
    const double forecast = (level + trend) * s_prev;
    if (t >= 2 * m) sse += (y(t) - forecast) * (y(t) - forecast);
    const double new_level = params.alpha * y(t) / s_prev + (1.0 - params.alpha) * (level + trend);
    trend = params.beta * (new_level - level) + (1.0 - params.beta) * trend;
    season(slot) = params.gamma * y(t) / new_level + (1.0 - params.gamma) * s_prev;
    level = new_level;
  }
  return sse;
}

HwGridResult hw_grid_oracle(const TimeSeries& series, double step) {
  series.validate();
  const int points = static_cast<int>(std::lround(1.0 / step)) + 1;
  const auto grid = [&](int k) { return k == points - 1 ? 1.0 : k * step; };
  HwGridResult best;
  bool first = true;
  for (int a = 0; a < points; ++a) {
    for (int b = 0; b < points; ++b) {
      for (int g = 0; g < points; ++g) {
        const HoltWintersParams p{grid(a), grid(b), grid(g)};
        double sse = hw_fit_sse(series, p);
        if (!std::isfinite(sse)) sse = std::numeric_limits<double>::infinity();
        ++best.evaluations;
        if (first || sse < best.sse) {
          best.params = p;
          best.sse = sse;
          first = false;
        }
      }
    }
  }
  return best;
}

Problem make_hw_problem(const TimeSeries& series) {
  series.validate();
  auto s = std::make_shared<const TimeSeries>(series);
  Problem p;
  p.name = "holt_winters";
  p.encoding = RealVectorEncoding::cube(3, 0.0, 1.0);
  p.sense = ObjectiveSense::Minimize;
  p.objective = [s](const Genome& g) {
    const auto& x = std::get<Eigen::VectorXd>(g);
    return hw_fit_sse(*s, {x(0), x(1), x(2)});
  };
  p.initial.emplace_back(Eigen::VectorXd::Constant(3, 0.5));
  return p;
}

}  // namespace nia::bench
