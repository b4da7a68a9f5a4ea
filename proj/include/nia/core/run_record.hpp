#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nia/core/budget.hpp"
#include "nia/core/encoding.hpp"

namespace nia {

enum class StopReason { MaxEvaluations, MaxIterations, TargetReached, WallTime, Converged };

std::string_view to_string(StopReason reason);

/// (evaluations so far, best-so-far fitness); appended on every improvement.
using HistoryPoint = std::pair<std::uint64_t, double>;

struct RunRecord {
  std::string algorithm;
  nlohmann::json config;
  std::uint64_t seed = 0;
  ObjectiveSense sense = ObjectiveSense::Minimize;
  Genome best;
  double best_fitness = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t iterations = 0;
  double wall_time_ms = 0.0;
  std::vector<HistoryPoint> history;
  /// Count of NaN/infinite objective values, each scored as worst fitness.
  std::uint64_t nonfinite_evaluations = 0;
  StopReason stop_reason = StopReason::MaxEvaluations;
};

/// Equality on everything except wall time.
bool same_trace(const RunRecord& a, const RunRecord& b);

nlohmann::json genome_to_json(const Genome& g);
Genome genome_from_json(const nlohmann::json& j);

/// Schema: {algorithm, seed, sense, config, best: {kind, value}, best_fitness,
/// evaluations, iterations, history: [[evals, fitness], ...], wall_time_ms,
/// nonfinite_evaluations, stop_reason}. Non-finite fitness serializes as null.
nlohmann::json to_json(const RunRecord& r);
RunRecord run_record_from_json(const nlohmann::json& j);

}  // namespace nia
