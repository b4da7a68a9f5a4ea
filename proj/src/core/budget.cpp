#include "nia/core/budget.hpp"

#include <limits>

#include "nia/core/errors.hpp"

namespace nia {

double worst_fitness(ObjectiveSense sense) {
  return sense == ObjectiveSense::Minimize ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity();
}

void Budget::validate() const {
  const bool evals = max_evaluations && *max_evaluations > 0;
  const bool iters = max_iterations && *max_iterations > 0;
  if (!evals && !iters) throw InvalidBudget("budget needs max_evaluations or max_iterations > 0");
  if (max_wall_time && max_wall_time->count() <= 0) throw InvalidBudget("max_wall_time must be positive");
}

}  // namespace nia
