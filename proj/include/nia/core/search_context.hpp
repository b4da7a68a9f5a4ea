#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "nia/core/budget.hpp"
#include "nia/core/problem.hpp"
#include "nia/core/rng.hpp"
#include "nia/core/run_record.hpp"

namespace nia {

/// Per-run bookkeeping shared by all solvers: the only route to the
/// objective, so it owns evaluation counting, best-so-far tracking,
/// history, and every stopping check.
///
/// Solvers call `exhausted()` before each evaluation, so a run never
/// exceeds max_evaluations (batch granule 0 for every solver).
class SearchContext {
 public:
  SearchContext(const Problem& problem, const Budget& budget, std::uint64_t seed);

  const Problem& problem() const { return problem_; }
  ObjectiveSense sense() const { return problem_.sense; }
  Rng& rng() { return rng_; }

  /// Any limit reached.
  bool exhausted() const;

  /// Repairs `genome` in place (if the problem has a repair hook), evaluates
  /// it, and updates the incumbent. Non-finite values are returned as the
  /// worst fitness.
  double evaluate(Genome& genome);

  /// Marks one solver iteration complete.
  void end_iteration() { ++iterations_; }

  bool better(double a, double b) const { return strictly_better(problem_.sense, a, b); }

  std::uint64_t evaluations() const { return evaluations_; }
  std::uint64_t iterations() const { return iterations_; }
  bool has_best() const { return best_.has_value(); }
  const Genome& best() const { return *best_; }
  double best_fitness() const { return best_fitness_; }

  RunRecord finish(std::string algorithm, nlohmann::json config) const;

 private:
  std::optional<StopReason> stop_reason() const;

  const Problem& problem_;
  Budget budget_;
  std::uint64_t seed_;
  Rng rng_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t evaluations_ = 0;
  std::uint64_t iterations_ = 0;
  std::uint64_t nonfinite_ = 0;
  std::optional<Genome> best_;
  double best_fitness_;
  std::vector<HistoryPoint> history_;
};

}  // namespace nia
