#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace nia {

enum class ObjectiveSense { Minimize, Maximize };

/// True when `a` is strictly better than `b` under `sense`. Ties are not
/// improvements, so the earlier discovery wins.
inline bool strictly_better(ObjectiveSense sense, double a, double b) {
  return sense == ObjectiveSense::Minimize ? a < b : a > b;
}

/// Worst representable fitness; non-finite objective values map here.
double worst_fitness(ObjectiveSense sense);

/// Stopping limits; a run stops as soon as any set limit is reached.
/// At least one of max_evaluations / max_iterations must be set and > 0.
struct Budget {
  std::optional<std::uint64_t> max_evaluations;
  std::optional<std::uint64_t> max_iterations;
  std::optional<double> target_fitness;
  std::optional<std::chrono::milliseconds> max_wall_time;

  static Budget evaluations(std::uint64_t n) {
    Budget b;
    b.max_evaluations = n;
    return b;
  }
  static Budget iterations(std::uint64_t n) {
    Budget b;
    b.max_iterations = n;
    return b;
  }

  /// Throws InvalidBudget.
  void validate() const;
};

}  // namespace nia
