#include "nia/algorithms/foa.hpp"

#include <cmath>

#include "nia/core/errors.hpp"

namespace nia::algo {

namespace {

const RealVectorEncoding& real_box(const Problem& problem, const char* who) {
  const auto* box = std::get_if<RealVectorEncoding>(&problem.encoding);
  if (!box) throw EncodingMismatch(std::string(who) + " requires a real-vector encoding");
  return *box;
}

}  // namespace

Eigen::VectorXd sample_in_ball(const Eigen::VectorXd& center, double radius, Rng& rng) {
  const Eigen::Index d = center.size();
  Eigen::VectorXd dir(d);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < d; ++i) dir(i) = rng.normal();
    norm = dir.norm();
  } while (norm == 0.0);
  const double r = radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(d));
  return center + (r / norm) * dir;
}

FruitFlySwarm::FruitFlySwarm(SearchContext& ctx, const FoaParams& params)
    : ctx_(ctx), params_(params), box_(real_box(ctx.problem(), "foa")) {
  params_.validate();
  initial_radius_ = params_.search_radius.value_or(0.1 * (box_.upper - box_.lower).maxCoeff());
  radius_ = initial_radius_;
  const auto& problem = ctx_.problem();
  Genome start = problem.initial.empty() ? random_genome(problem.encoding, ctx_.rng()) : problem.initial.front();
  if (!conforms(start, problem.encoding)) throw EncodingMismatch("foa: initial point outside the box");
  incumbent_fitness_ = ctx_.evaluate(start);
  incumbent_ = std::get<Eigen::VectorXd>(start);
}

void FruitFlySwarm::step() {
  auto& rng = ctx_.rng();
  Eigen::VectorXd best_sample;
  double best_fitness = worst_fitness(ctx_.sense());
  bool any = false;
  for (std::size_t s = 0; s < params_.swarm_size && !ctx_.exhausted(); ++s) {
    Eigen::VectorXd x = sample_in_ball(incumbent_, radius_, rng);
    clamp_to_box(x, box_);
    Genome g = std::move(x);
    const double f = ctx_.evaluate(g);
    if (!any || ctx_.better(f, best_fitness)) {
      best_sample = std::get<Eigen::VectorXd>(g);
      best_fitness = f;
      any = true;
    }
  }
  if (any && ctx_.better(best_fitness, incumbent_fitness_)) {
    incumbent_ = best_sample;
    incumbent_fitness_ = best_fitness;
  }
  ++iteration_;
  radius_ = initial_radius_ * std::pow(params_.radius_decay, static_cast<double>(iteration_));
}

RunRecord foa_run(const Problem& problem, const FoaParams& params, const Budget& budget, std::uint64_t seed) {
  params.validate();
  real_box(problem, "foa");
  SearchContext ctx(problem, budget, seed);
  FruitFlySwarm swarm(ctx, params);
  while (!ctx.exhausted()) {
    swarm.step();
    ctx.end_iteration();
  }
  return ctx.finish("foa", nlohmann::json(params));
}

}  // namespace nia::algo
