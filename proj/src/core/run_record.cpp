#include "nia/core/run_record.hpp"

#include <cmath>
#include <limits>

#include "nia/core/errors.hpp"

namespace nia {

using nlohmann::json;

namespace {

json fitness_json(double f) { return std::isfinite(f) ? json(f) : json(nullptr); }

double fitness_from(const json& j, ObjectiveSense sense) {
  return j.is_null() ? worst_fitness(sense) : j.get<double>();
}

}  // namespace

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::MaxEvaluations: return "max_evaluations";
    case StopReason::MaxIterations: return "max_iterations";
    case StopReason::TargetReached: return "target_reached";
    case StopReason::WallTime: return "wall_time";
    case StopReason::Converged: return "converged";
  }
  return "?";
}

bool same_trace(const RunRecord& a, const RunRecord& b) {
  return a.algorithm == b.algorithm && a.config == b.config && a.seed == b.seed && a.sense == b.sense &&
         genome_equal(a.best, b.best) &&
         (a.best_fitness == b.best_fitness || (std::isnan(a.best_fitness) && std::isnan(b.best_fitness))) &&
         a.evaluations == b.evaluations && a.iterations == b.iterations && a.history == b.history &&
         a.nonfinite_evaluations == b.nonfinite_evaluations && a.stop_reason == b.stop_reason;
}

json genome_to_json(const Genome& g) {
  if (const auto* bits = std::get_if<BitString>(&g)) {
    json v = json::array();
    for (auto b : *bits) v.push_back(static_cast<int>(b));
    return {{"kind", "bits"}, {"value", v}};
  }
  if (const auto* perm = std::get_if<Permutation>(&g)) return {{"kind", "permutation"}, {"value", *perm}};
  const auto& x = std::get<Eigen::VectorXd>(g);
  return {{"kind", "vector"}, {"value", std::vector<double>(x.data(), x.data() + x.size())}};
}

Genome genome_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "bits") {
    BitString bits;
    for (const auto& b : j.at("value")) bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
    return bits;
  }
  if (kind == "permutation") return j.at("value").get<Permutation>();
  if (kind == "vector") {
    const auto v = j.at("value").get<std::vector<double>>();
    return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
  }
  throw SchemaError("unknown genome kind: " + kind);
}

json to_json(const RunRecord& r) {
  json history = json::array();
  for (const auto& [evals, f] : r.history) history.push_back(json::array({evals, fitness_json(f)}));
  return {
      {"algorithm", r.algorithm},
      {"seed", r.seed},
      {"sense", r.sense == ObjectiveSense::Minimize ? "minimize" : "maximize"},
      {"config", r.config},
      {"best", genome_to_json(r.best)},
      {"best_fitness", fitness_json(r.best_fitness)},
      {"evaluations", r.evaluations},
      {"iterations", r.iterations},
      {"history", history},
      {"wall_time_ms", r.wall_time_ms},
      {"nonfinite_evaluations", r.nonfinite_evaluations},
      {"stop_reason", to_string(r.stop_reason)},
  };
}

RunRecord run_record_from_json(const json& j) {
  try {
    RunRecord r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.sense = j.at("sense").get<std::string>() == "maximize" ? ObjectiveSense::Maximize : ObjectiveSense::Minimize;
    r.config = j.at("config");
    r.best = genome_from_json(j.at("best"));
    r.best_fitness = fitness_from(j.at("best_fitness"), r.sense);
    r.evaluations = j.at("evaluations").get<std::uint64_t>();
    r.iterations = j.at("iterations").get<std::uint64_t>();
    for (const auto& p : j.at("history")) r.history.emplace_back(p.at(0).get<std::uint64_t>(), fitness_from(p.at(1), r.sense));
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    r.nonfinite_evaluations = j.at("nonfinite_evaluations").get<std::uint64_t>();
    const auto reason = j.at("stop_reason").get<std::string>();
    for (auto sr : {StopReason::MaxEvaluations, StopReason::MaxIterations, StopReason::TargetReached,
                    StopReason::WallTime, StopReason::Converged}) {
      if (to_string(sr) == reason) r.stop_reason = sr;
    }
    return r;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed run record: ") + e.what());
  }
}

}  // namespace nia
