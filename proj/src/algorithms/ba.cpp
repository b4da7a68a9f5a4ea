#include "nia/algorithms/ba.hpp"

#include <cmath>
#include <vector>

#include "nia/core/errors.hpp"
#include "nia/core/search_context.hpp"

namespace nia::algo {

RunRecord ba_run(const Problem& problem, const BaParams& params, const Budget& budget, std::uint64_t seed) {
  params.validate();
  const auto* box = std::get_if<RealVectorEncoding>(&problem.encoding);
  if (!box) throw EncodingMismatch("ba requires a real-vector encoding");

  SearchContext ctx(problem, budget, seed);
  auto& rng = ctx.rng();
  const std::size_t n = params.population_size;
  const Eigen::Index dim = box->lower.size();

  std::vector<Eigen::VectorXd> x;
  std::vector<double> fit;
  x.reserve(n);
  fit.reserve(n);
  for (std::size_t i = 0; i < n && !ctx.exhausted(); ++i) {
    Genome g = i < problem.initial.size() ? problem.initial[i] : random_genome(problem.encoding, rng);
    if (!conforms(g, problem.encoding)) throw EncodingMismatch("ba: initial point outside the box");
    fit.push_back(ctx.evaluate(g));
    x.push_back(std::get<Eigen::VectorXd>(g));
  }
  if (x.size() < n) return ctx.finish("ba", nlohmann::json(params));

  std::size_t best_index = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (ctx.better(fit[i], fit[best_index])) best_index = i;
  }
  Eigen::VectorXd best = x[best_index];
  double best_fitness = fit[best_index];

  std::vector<Eigen::VectorXd> v(n, Eigen::VectorXd::Zero(dim));
  std::vector<double> loudness(n, params.loudness);
  std::vector<double> pulse(n, params.pulse_rate);

  for (std::uint64_t t = 1; !ctx.exhausted(); ++t) {
    for (std::size_t i = 0; i < n && !ctx.exhausted(); ++i) {
      const double freq = params.f_min + (params.f_max - params.f_min) * rng.uniform();
      v[i] += (x[i] - best) * freq;
      Eigen::VectorXd y = x[i] + v[i];
      if (rng.uniform() > pulse[i]) {
        double mean_loudness = 0.0;
        for (double a : loudness) mean_loudness += a;
        mean_loudness /= static_cast<double>(n);
        for (Eigen::Index d = 0; d < dim; ++d) y(d) = best(d) + rng.uniform(-1.0, 1.0) * mean_loudness;
      }
      clamp_to_box(y, *box);
      Genome g = y;
      const double fy = ctx.evaluate(g);
      if (ctx.better(fy, fit[i]) && rng.uniform() < loudness[i]) {
        x[i] = y;
        fit[i] = fy;
        loudness[i] *= params.alpha_loudness;
        pulse[i] = params.pulse_rate * (1.0 - std::exp(-params.gamma_rate * static_cast<double>(t)));
      }
      if (ctx.better(fy, best_fitness)) {
        best = y;
        best_fitness = fy;
      }
    }
    ctx.end_iteration();
  }
  return ctx.finish("ba", nlohmann::json(params));
}

}  // namespace nia::algo
