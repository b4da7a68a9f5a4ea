#include "nia/algorithms/params.hpp"

#include <initializer_list>
#include <string_view>

#include "nia/core/errors.hpp"

namespace nia::algo {

using nlohmann::json;

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw InvalidParams(message);
}

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> known) {
  if (!j.is_object()) throw InvalidParams("params must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool found = false;
    for (auto k : known) found = found || key == k;
    if (!found) throw InvalidParams("unknown parameter: " + key);
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidParams(std::string("bad value for parameter: ") + key);
  }
}

}  // namespace

void GaParams::validate() const {
  require(population_size >= 2, "ga: population_size must be >= 2");
  require(elitism_count < population_size, "ga: elitism_count must be < population_size");
  require(crossover_rate >= 0.0 && crossover_rate <= 1.0, "ga: crossover_rate must be in [0,1]");
  require(!mutation_rate || (*mutation_rate >= 0.0 && *mutation_rate <= 1.0), "ga: mutation_rate must be in [0,1]");
  require(selection != Selection::Tournament || tournament_size >= 1, "ga: tournament_size must be >= 1");
  require(blend_alpha >= 0.0, "ga: blend_alpha must be >= 0");
  require(mutation_sigma >= 0.0, "ga: mutation_sigma must be >= 0");
}

void AcoParams::validate() const {
  require(alpha >= 0.0, "aco: alpha must be >= 0");
  require(beta >= 0.0, "aco: beta must be >= 0");
  require(rho > 0.0 && rho < 1.0, "aco: rho must be in (0,1)");
  require(q > 0.0, "aco: q must be > 0");
  require(initial_pheromone > 0.0, "aco: initial_pheromone must be > 0");
  require(tau_min > 0.0, "aco: tau_min must be > 0");
}

void FoaParams::validate() const {
  require(swarm_size >= 1, "foa: swarm_size must be >= 1");
  require(!search_radius || *search_radius > 0.0, "foa: search_radius must be > 0");
  require(radius_decay > 0.0 && radius_decay <= 1.0, "foa: radius_decay must be in (0,1]");
}

void BaParams::validate() const {
  require(population_size >= 1, "ba: population_size must be >= 1");
  require(f_min <= f_max, "ba: f_min must be <= f_max");
  require(loudness > 0.0, "ba: loudness must be > 0");
  require(pulse_rate >= 0.0 && pulse_rate <= 1.0, "ba: pulse_rate must be in [0,1]");
  require(alpha_loudness > 0.0 && alpha_loudness < 1.0, "ba: alpha_loudness must be in (0,1)");
  require(gamma_rate > 0.0, "ba: gamma_rate must be > 0");
}

std::string algorithm_id(const AlgorithmConfig& config) {
  static constexpr const char* ids[] = {"ga", "aco", "foa", "ba"};
  return ids[config.index()];
}

void to_json(json& j, const GaParams& p) {
  j = json{{"population_size", p.population_size},
           {"crossover_rate", p.crossover_rate},
           {"mutation_rate", p.mutation_rate ? json(*p.mutation_rate) : json(nullptr)},
           {"elitism_count", p.elitism_count},
           {"selection", p.selection == Selection::Tournament ? "tournament" : "roulette"},
           {"tournament_size", p.tournament_size},
           {"bit_crossover", p.bit_crossover == BitCrossover::Uniform ? "uniform" : "one_point"},
           {"blend_alpha", p.blend_alpha},
           {"mutation_sigma", p.mutation_sigma}};
}

void from_json(const json& j, GaParams& p) {
  reject_unknown_keys(j, {"population_size", "crossover_rate", "mutation_rate", "elitism_count", "selection",
                          "tournament_size", "bit_crossover", "blend_alpha", "mutation_sigma"});
  read(j, "population_size", p.population_size);
  read(j, "crossover_rate", p.crossover_rate);
  if (j.contains("mutation_rate")) {
    if (j["mutation_rate"].is_null()) {
      p.mutation_rate.reset();
    } else {
      double rate = 0.0;
      read(j, "mutation_rate", rate);
      p.mutation_rate = rate;
    }
  }
  read(j, "elitism_count", p.elitism_count);
  read(j, "tournament_size", p.tournament_size);
  read(j, "blend_alpha", p.blend_alpha);
  read(j, "mutation_sigma", p.mutation_sigma);
  std::string s;
  if (j.contains("selection")) {
    read(j, "selection", s);
    require(s == "tournament" || s == "roulette", "ga: selection must be tournament|roulette");
    p.selection = s == "tournament" ? Selection::Tournament : Selection::Roulette;
  }
  if (j.contains("bit_crossover")) {
    read(j, "bit_crossover", s);
    require(s == "uniform" || s == "one_point", "ga: bit_crossover must be uniform|one_point");
    p.bit_crossover = s == "uniform" ? BitCrossover::Uniform : BitCrossover::OnePoint;
  }
  p.validate();
}

void to_json(json& j, const AcoParams& p) {
  j = json{{"ant_count", p.ant_count},
           {"alpha", p.alpha},
           {"beta", p.beta},
           {"rho", p.rho},
           {"q", p.q},
           {"initial_pheromone", p.initial_pheromone},
           {"tau_min", p.tau_min},
           {"deposit", p.deposit == DepositPolicy::GlobalBest ? "global_best" : "all_ants"}};
}

void from_json(const json& j, AcoParams& p) {
  reject_unknown_keys(j, {"ant_count", "alpha", "beta", "rho", "q", "initial_pheromone", "tau_min", "deposit"});
  read(j, "ant_count", p.ant_count);
  read(j, "alpha", p.alpha);
  read(j, "beta", p.beta);
  read(j, "rho", p.rho);
  read(j, "q", p.q);
  read(j, "initial_pheromone", p.initial_pheromone);
  read(j, "tau_min", p.tau_min);
  if (j.contains("deposit")) {
    std::string s;
    read(j, "deposit", s);
    require(s == "global_best" || s == "all_ants", "aco: deposit must be global_best|all_ants");
    p.deposit = s == "global_best" ? DepositPolicy::GlobalBest : DepositPolicy::AllAnts;
  }
  p.validate();
}

void to_json(json& j, const FoaParams& p) {
  j = json{{"swarm_size", p.swarm_size},
           {"search_radius", p.search_radius ? json(*p.search_radius) : json(nullptr)},
           {"radius_decay", p.radius_decay}};
}

void from_json(const json& j, FoaParams& p) {
  reject_unknown_keys(j, {"swarm_size", "search_radius", "radius_decay"});
  read(j, "swarm_size", p.swarm_size);
  if (j.contains("search_radius")) {
    if (j["search_radius"].is_null()) {
      p.search_radius.reset();
    } else {
      double r = 0.0;
      read(j, "search_radius", r);
      p.search_radius = r;
    }
  }
  read(j, "radius_decay", p.radius_decay);
  p.validate();
}

void to_json(json& j, const BaParams& p) {
  j = json{{"population_size", p.population_size}, {"f_min", p.f_min},
           {"f_max", p.f_max},                     {"loudness", p.loudness},
           {"pulse_rate", p.pulse_rate},           {"alpha_loudness", p.alpha_loudness},
           {"gamma_rate", p.gamma_rate}};
}

void from_json(const json& j, BaParams& p) {
  reject_unknown_keys(j, {"population_size", "f_min", "f_max", "loudness", "pulse_rate", "alpha_loudness",
                          "gamma_rate"});
  read(j, "population_size", p.population_size);
  read(j, "f_min", p.f_min);
  read(j, "f_max", p.f_max);
  read(j, "loudness", p.loudness);
  read(j, "pulse_rate", p.pulse_rate);
  read(j, "alpha_loudness", p.alpha_loudness);
  read(j, "gamma_rate", p.gamma_rate);
  p.validate();
}

AlgorithmConfig parse_algorithm_config(const json& j) {
  if (!j.is_object() || !j.contains("algorithm")) throw InvalidParams("config needs an \"algorithm\" field");
  const json params = j.value("params", json::object());
  const auto id = j.at("algorithm").get<std::string>();
  if (id == "ga") return params.get<GaParams>();
  if (id == "aco") return params.get<AcoParams>();
  if (id == "foa") return params.get<FoaParams>();
  if (id == "ba") return params.get<BaParams>();
  throw InvalidParams("unknown algorithm: " + id);
}

json algorithm_config_to_json(const AlgorithmConfig& config) {
  json params;
  std::visit([&](const auto& p) { params = p; }, config);
  return {{"algorithm", algorithm_id(config)}, {"params", params}};
}

}  // namespace nia::algo
