#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

namespace nia::algo {

enum class Selection { Tournament, Roulette };
enum class BitCrossover { OnePoint, Uniform };

/// Genetic algorithm settings. Operators are chosen per encoding:
///   bitstring/mixed: one-point or uniform crossover; bit-flip / per-slot resample
///   permutation:     order crossover (OX); swap mutation
///   real vector:     BLX-alpha blend crossover; gaussian mutation
struct GaParams {
  std::size_t population_size = 100;
  double crossover_rate = 0.9;
  /// Per-gene mutation probability; unset means 1 / genome length.
  std::optional<double> mutation_rate;
  std::size_t elitism_count = 2;
  Selection selection = Selection::Tournament;
  std::size_t tournament_size = 3;
  BitCrossover bit_crossover = BitCrossover::Uniform;
  double blend_alpha = 0.5;
  /// Gaussian mutation sigma as a fraction of each dimension's range.
  double mutation_sigma = 0.1;

  void validate() const;
};

enum class DepositPolicy { GlobalBest, AllAnts };

struct AcoParams {
  /// Ants per iteration; 0 means one ant per city.
  std::size_t ant_count = 0;
  double alpha = 1.0;
  double beta = 2.0;
  double rho = 0.5;
  double q = 1.0;
  double initial_pheromone = 1.0;
  double tau_min = 1e-3;
  DepositPolicy deposit = DepositPolicy::GlobalBest;

  void validate() const;
};

struct FoaParams {
  std::size_t swarm_size = 20;
  /// Initial sampling radius; unset means 10% of the widest box dimension.
  std::optional<double> search_radius;
  double radius_decay = 0.99;

  void validate() const;
};

struct BaParams {
  std::size_t population_size = 30;
  double f_min = 0.0;
  double f_max = 2.0;
  double loudness = 0.9;
  double pulse_rate = 0.5;
  double alpha_loudness = 0.97;
  double gamma_rate = 0.1;

  void validate() const;
};

using AlgorithmConfig = std::variant<GaParams, AcoParams, FoaParams, BaParams>;

/// "ga", "aco", "foa" or "ba".
std::string algorithm_id(const AlgorithmConfig& config);

void to_json(nlohmann::json& j, const GaParams& p);
void from_json(const nlohmann::json& j, GaParams& p);
void to_json(nlohmann::json& j, const AcoParams& p);
void from_json(const nlohmann::json& j, AcoParams& p);
void to_json(nlohmann::json& j, const FoaParams& p);
void from_json(const nlohmann::json& j, FoaParams& p);
void to_json(nlohmann::json& j, const BaParams& p);
void from_json(const nlohmann::json& j, BaParams& p);

/// Parses `{"algorithm": id, "params": {...}}`; missing params take defaults,
/// unknown keys raise InvalidParams.
AlgorithmConfig parse_algorithm_config(const nlohmann::json& j);
nlohmann::json algorithm_config_to_json(const AlgorithmConfig& config);

}  // namespace nia::algo
