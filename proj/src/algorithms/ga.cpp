#include "nia/algorithms/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nia/core/errors.hpp"

namespace nia::algo {

namespace {

/// Indices sorted best-first; stable, so ties keep population order.
std::vector<std::size_t> ranking(std::span<const Individual> pop, ObjectiveSense sense) {
  std::vector<std::size_t> idx(pop.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return strictly_better(sense, pop[a].fitness, pop[b].fitness);
  });
  return idx;
}

std::size_t tournament(std::span<const Individual> pop, std::size_t k, SearchContext& ctx) {
  auto& rng = ctx.rng();
  std::size_t winner = static_cast<std::size_t>(rng.below(pop.size()));
  for (std::size_t i = 1; i < k; ++i) {
    const auto challenger = static_cast<std::size_t>(rng.below(pop.size()));
    if (ctx.better(pop[challenger].fitness, pop[winner].fitness)) winner = challenger;
  }
  return winner;
}

// Fitness-proportional on shifted fitness: the worst finite member gets a
// small positive weight, non-finite members get none.
std::size_t roulette(std::span<const Individual> pop, SearchContext& ctx) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& ind : pop) {
    if (!std::isfinite(ind.fitness)) continue;
    lo = std::min(lo, ind.fitness);
    hi = std::max(hi, ind.fitness);
  }
  auto& rng = ctx.rng();
  if (!std::isfinite(lo) || hi == lo) return static_cast<std::size_t>(rng.below(pop.size()));
  const double eps = 1e-9 * (hi - lo);
  std::vector<double> weights(pop.size(), 0.0);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const double f = pop[i].fitness;
    if (!std::isfinite(f)) continue;
    weights[i] = (ctx.sense() == ObjectiveSense::Maximize ? f - lo : hi - f) + eps;
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  double r = rng.uniform() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (r < weights[i]) return i;
    r -= weights[i];
  }
  return pop.size() - 1;
}

std::size_t select(std::span<const Individual> pop, const GaParams& params, SearchContext& ctx) {
  return params.selection == Selection::Tournament ? tournament(pop, params.tournament_size, ctx)
                                                   : roulette(pop, ctx);
}

// Discrete crossover shared by bitstrings (vector<uint8_t>) and mixed arrays (VectorXd).
template <typename Seq>
void discrete_crossover(Seq& a, Seq& b, BitCrossover op, Rng& rng) {
  const auto n = static_cast<std::size_t>(a.size());
  if (n < 2) return;
  if (op == BitCrossover::OnePoint) {
    const auto cut = 1 + static_cast<std::size_t>(rng.below(n - 1));
    for (std::size_t i = cut; i < n; ++i) std::swap(a[i], b[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.next() >> 63) std::swap(a[i], b[i]);
    }
  }
}

void blend_crossover(Eigen::VectorXd& a, Eigen::VectorXd& b, double alpha, const RealVectorEncoding& box, Rng& rng) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double lo = std::min(a(i), b(i));
    const double d = std::max(a(i), b(i)) - lo;
    const double from = lo - alpha * d;
    const double width = (1.0 + 2.0 * alpha) * d;
    a(i) = from + rng.uniform() * width;
    b(i) = from + rng.uniform() * width;
  }
  clamp_to_box(a, box);
  clamp_to_box(b, box);
}

void mutate(Genome& g, const Encoding& enc, double rate, const GaParams& params, Rng& rng) {
  if (rate <= 0.0) return;
  switch (kind_of(enc)) {
    case EncodingKind::Bitstring:
      for (auto& bit : std::get<BitString>(g)) {
        if (rng.bernoulli(rate)) bit ^= 1;
      }
      break;
    case EncodingKind::Permutation:
      swap_mutation(std::get<Permutation>(g), rate, rng);
      break;
    case EncodingKind::RealVector: {
      auto& x = std::get<Eigen::VectorXd>(g);
      const auto& box = std::get<RealVectorEncoding>(enc);
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (rng.bernoulli(rate)) x(i) += params.mutation_sigma * (box.upper(i) - box.lower(i)) * rng.normal();
      }
      clamp_to_box(x, box);
      break;
    }
    case EncodingKind::MixedArray: {
      auto& x = std::get<Eigen::VectorXd>(g);
      const auto& slots = std::get<MixedArrayEncoding>(enc).slots;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!rng.bernoulli(rate)) continue;
        const auto k = static_cast<Eigen::Index>(i);
        if (const auto* s = std::get_if<IntegerSlot>(&slots[i])) {
          x(k) = static_cast<double>(rng.integer(s->lo, s->hi));
        } else {
          const auto& r = std::get<RealSlot>(slots[i]);
          x(k) = rng.uniform(r.lo, r.hi);
        }
      }
      break;
    }
  }
}

void crossover(Genome& a, Genome& b, const Encoding& enc, const GaParams& params, Rng& rng) {
  switch (kind_of(enc)) {
    case EncodingKind::Bitstring:
      discrete_crossover(std::get<BitString>(a), std::get<BitString>(b), params.bit_crossover, rng);
      break;
    case EncodingKind::MixedArray:
      discrete_crossover(std::get<Eigen::VectorXd>(a), std::get<Eigen::VectorXd>(b), params.bit_crossover, rng);
      break;
    case EncodingKind::Permutation: {
      const auto& pa = std::get<Permutation>(a);
      const auto& pb = std::get<Permutation>(b);
      Permutation c1 = order_crossover(pa, pb, rng);
      Permutation c2 = order_crossover(pb, pa, rng);
      a = std::move(c1);
      b = std::move(c2);
      break;
    }
    case EncodingKind::RealVector:
      blend_crossover(std::get<Eigen::VectorXd>(a), std::get<Eigen::VectorXd>(b), params.blend_alpha,
                      std::get<RealVectorEncoding>(enc), rng);
      break;
  }
}

double effective_mutation_rate(const GaParams& params, const Encoding& enc) {
  return params.mutation_rate.value_or(1.0 / static_cast<double>(length_of(enc)));
}

}  // namespace

Permutation order_crossover(const Permutation& a, const Permutation& b, Rng& rng) {
  const std::size_t n = a.size();
  if (n < 2) return a;
  std::size_t lo = static_cast<std::size_t>(rng.below(n));
  std::size_t hi = static_cast<std::size_t>(rng.below(n));
  if (lo > hi) std::swap(lo, hi);
  Permutation child(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t i = lo; i <= hi; ++i) {
    child[i] = a[i];
    used[static_cast<std::size_t>(a[i])] = true;
  }
  std::size_t pos = (hi + 1) % n;
  for (std::size_t k = 0; k < n; ++k) {
    const int city = b[(hi + 1 + k) % n];
    if (used[static_cast<std::size_t>(city)]) continue;
    child[pos] = city;
    used[static_cast<std::size_t>(city)] = true;
    pos = (pos + 1) % n;
  }
  return child;
}

void swap_mutation(Permutation& p, double rate, Rng& rng) {
  if (p.size() < 2) return;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (rng.bernoulli(rate)) std::swap(p[i], p[static_cast<std::size_t>(rng.below(p.size()))]);
  }
}

Population ga_initial_population(SearchContext& ctx, const GaParams& params) {
  params.validate();
  const auto& problem = ctx.problem();
  Population pop;
  pop.reserve(params.population_size);
  for (std::size_t i = 0; i < params.population_size && !ctx.exhausted(); ++i) {
    Genome g = i < problem.initial.size() ? problem.initial[i] : random_genome(problem.encoding, ctx.rng());
    if (!conforms(g, problem.encoding)) throw EncodingMismatch("initial genome does not conform to the encoding");
    const double f = ctx.evaluate(g);
    pop.push_back({std::move(g), f});
  }
  return pop;
}

Population ga_step(std::span<const Individual> population, SearchContext& ctx, const GaParams& params) {
  params.validate();
  const auto& enc = ctx.problem().encoding;
  if (population.size() != params.population_size) throw InvalidParams("ga_step: population size mismatch");
  for (const auto& ind : population) {
    if (!conforms(ind.genome, enc)) throw EncodingMismatch("ga_step: individual does not conform to the encoding");
  }
  const auto order = ranking(population, ctx.sense());
  const double rate = effective_mutation_rate(params, enc);
  auto& rng = ctx.rng();

  Population next;
  next.reserve(population.size());
  for (std::size_t i = 0; i < params.elitism_count; ++i) next.push_back(population[order[i]]);

  while (next.size() < population.size() && !ctx.exhausted()) {
    Individual a = population[select(population, params, ctx)];
    Individual b = population[select(population, params, ctx)];
    if (rng.bernoulli(params.crossover_rate)) crossover(a.genome, b.genome, enc, params, rng);
    mutate(a.genome, enc, rate, params, rng);
    mutate(b.genome, enc, rate, params, rng);
    for (auto* child : {&a, &b}) {
      if (next.size() == population.size() || ctx.exhausted()) break;
      child->fitness = ctx.evaluate(child->genome);
      next.push_back(std::move(*child));
    }
  }
  // Budget ran out: pad with the best survivors not already carried over.
  for (std::size_t r = params.elitism_count; next.size() < population.size(); ++r) {
    next.push_back(population[order[r]]);
  }
  return next;
}

RunRecord ga_run(const Problem& problem, const GaParams& params, const Budget& budget, std::uint64_t seed) {
  params.validate();
  SearchContext ctx(problem, budget, seed);
  Population pop = ga_initial_population(ctx, params);
  if (pop.size() == params.population_size) {
    while (!ctx.exhausted()) {
      pop = ga_step(pop, ctx, params);
      ctx.end_iteration();
    }
  }
  return ctx.finish("ga", nlohmann::json(params));
}

}  // namespace nia::algo
