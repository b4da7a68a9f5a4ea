#pragma once

#include <cstdint>

#include "nia/algorithms/params.hpp"
#include "nia/core/budget.hpp"
#include "nia/core/problem.hpp"
#include "nia/core/run_record.hpp"

namespace nia {

/// True when the solver behind `config` can operate on `problem`.
bool supports(const algo::AlgorithmConfig& config, const Problem& problem);

/// Uniform driver: dispatches to the solver selected by `config`.
/// Throws EncodingMismatch when the solver cannot handle the problem's
/// encoding and InvalidBudget when no evaluation/iteration limit is set.
/// Equal arguments produce RunRecords equal in everything but wall time.
RunRecord run_optimizer(const Problem& problem, const algo::AlgorithmConfig& config, const Budget& budget,
                        std::uint64_t seed);

}  // namespace nia
