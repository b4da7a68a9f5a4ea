#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nia/algorithms/params.hpp"
#include "nia/core/problem.hpp"
#include "nia/core/run_record.hpp"
#include "nia/core/search_context.hpp"

namespace nia::algo {

struct Individual {
  Genome genome;
  double fitness = 0.0;
};

using Population = std::vector<Individual>;

/// Seeds from `problem.initial` first, then uniform random genomes. May
/// return fewer than population_size individuals if the budget runs out.
Population ga_initial_population(SearchContext& ctx, const GaParams& params);

/// One generation: the elitism_count best individuals are copied unchanged,
/// the remaining slots are filled by selection, crossover, mutation and
/// evaluation. If the budget runs out mid-generation the unfilled slots keep
/// the best survivors of `population`, so the size is always preserved.
/// Throws EncodingMismatch if an individual does not conform to the encoding.
Population ga_step(std::span<const Individual> population, SearchContext& ctx, const GaParams& params);

RunRecord ga_run(const Problem& problem, const GaParams& params, const Budget& budget, std::uint64_t seed);

/// Order crossover (OX1): a slice of `a` is kept in place, the rest is
/// filled with the remaining cities in the order they appear in `b`.
Permutation order_crossover(const Permutation& a, const Permutation& b, Rng& rng);
/// Each position is swapped with a uniformly chosen position with probability `rate`.
void swap_mutation(Permutation& p, double rate, Rng& rng);

}  // namespace nia::algo
