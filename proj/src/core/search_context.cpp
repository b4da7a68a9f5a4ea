#include "nia/core/search_context.hpp"

#include <cmath>

#include "nia/core/errors.hpp"

namespace nia {

SearchContext::SearchContext(const Problem& problem, const Budget& budget, std::uint64_t seed)
    : problem_(problem),
      budget_(budget),
      seed_(seed),
      rng_(rng_stream(seed, 0)),
      start_(std::chrono::steady_clock::now()),
      best_fitness_(worst_fitness(problem.sense)) {
  budget_.validate();
  check_encoding(problem_.encoding);
  if (!problem_.objective) throw InvalidParams("problem has no objective");
}

std::optional<StopReason> SearchContext::stop_reason() const {
  if (budget_.max_evaluations && *budget_.max_evaluations > 0 && evaluations_ >= *budget_.max_evaluations) {
    return StopReason::MaxEvaluations;
  }
  if (budget_.max_iterations && *budget_.max_iterations > 0 && iterations_ >= *budget_.max_iterations) {
    return StopReason::MaxIterations;
  }
  if (budget_.target_fitness && best_ &&
      (best_fitness_ == *budget_.target_fitness || better(best_fitness_, *budget_.target_fitness))) {
    return StopReason::TargetReached;
  }
  if (budget_.max_wall_time && std::chrono::steady_clock::now() - start_ >= *budget_.max_wall_time) {
    return StopReason::WallTime;
  }
  return std::nullopt;
}

bool SearchContext::exhausted() const { return stop_reason().has_value(); }

double SearchContext::evaluate(Genome& genome) {
  if (problem_.repair) problem_.repair(genome);
  double f = problem_.objective(genome);
  ++evaluations_;
  if (!std::isfinite(f)) {
    ++nonfinite_;
    f = worst_fitness(problem_.sense);
  }
  if (!best_ || better(f, best_fitness_)) {
    best_ = genome;
    best_fitness_ = f;
    history_.emplace_back(evaluations_, f);
  }
  return f;
}

RunRecord SearchContext::finish(std::string algorithm, nlohmann::json config) const {
  RunRecord r;
  r.algorithm = std::move(algorithm);
  r.config = std::move(config);
  r.seed = seed_;
  r.sense = problem_.sense;
  if (best_) r.best = *best_;
  r.best_fitness = best_fitness_;
  r.evaluations = evaluations_;
  r.iterations = iterations_;
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  r.history = history_;
  r.nonfinite_evaluations = nonfinite_;
  r.stop_reason = stop_reason().value_or(StopReason::Converged);
  return r;
}

}  // namespace nia
