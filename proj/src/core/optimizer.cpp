#include "nia/core/optimizer.hpp"

#include "nia/algorithms/aco.hpp"
#include "nia/algorithms/ba.hpp"
#include "nia/algorithms/foa.hpp"
#include "nia/algorithms/ga.hpp"
#include "nia/core/errors.hpp"

namespace nia {

bool supports(const algo::AlgorithmConfig& config, const Problem& problem) {
  const auto kind = kind_of(problem.encoding);
  switch (config.index()) {
    case 0: return true;
    case 1: return kind == EncodingKind::Permutation && problem.distances.has_value();
    default: return kind == EncodingKind::RealVector;
  }
}

RunRecord run_optimizer(const Problem& problem, const algo::AlgorithmConfig& config, const Budget& budget,
                        std::uint64_t seed) {
  budget.validate();
  if (!supports(config, problem)) {
    throw EncodingMismatch(algo::algorithm_id(config) + " cannot operate on " +
                           std::string(to_string(kind_of(problem.encoding))) + " encoding");
  }
  return std::visit(
      [&](const auto& params) -> RunRecord {
        using P = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<P, algo::GaParams>) return algo::ga_run(problem, params, budget, seed);
        if constexpr (std::is_same_v<P, algo::AcoParams>) return algo::aco_run(problem, params, budget, seed);
        if constexpr (std::is_same_v<P, algo::FoaParams>) return algo::foa_run(problem, params, budget, seed);
        if constexpr (std::is_same_v<P, algo::BaParams>) return algo::ba_run(problem, params, budget, seed);
      },
      config);
}

}  // namespace nia
