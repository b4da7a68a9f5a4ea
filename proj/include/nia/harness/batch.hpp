#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nia/algorithms/params.hpp"
#include "nia/core/budget.hpp"
#include "nia/core/problem.hpp"
#include "nia/core/run_record.hpp"

namespace nia::harness {

/// One independent optimizer run.
struct BatchCell {
  const Problem* problem = nullptr;
  algo::AlgorithmConfig config;
  Budget budget;
  std::uint64_t seed = 0;
};

/// Runs every cell and returns records in cell order. With `threads` > 1 the
/// cells run concurrently; results do not depend on the thread count.
std::vector<RunRecord> run_batch(const std::vector<BatchCell>& cells, unsigned threads = 1);

enum class ProblemFamily { Knapsack, Tsp };

/// Problem family x generator seeds x size sweep, solved by one algorithm
/// (or the exact oracle when `algorithm` is unset).
struct ExperimentSpec {
  ProblemFamily family = ProblemFamily::Knapsack;
  std::vector<std::uint64_t> instance_seeds{1};
  std::vector<std::size_t> sizes;
  std::optional<algo::AlgorithmConfig> algorithm;
  std::size_t repetitions = 1;
  Budget budget = Budget::evaluations(10'000);
  double tightness = 0.5;
  std::optional<std::filesystem::path> output;

  /// Throws InvalidParams: repetitions >= 1, sizes nonempty and strictly increasing.
  void validate() const;
};

/// Records in (size, instance seed, repetition) order. Oracle runs report
/// algorithm "oracle" with zero evaluations.
std::vector<RunRecord> run_experiment(const ExperimentSpec& spec, unsigned threads = 1);

}  // namespace nia::harness
