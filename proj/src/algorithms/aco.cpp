#include "nia/algorithms/aco.hpp"

#include <algorithm>
#include <cmath>

#include "nia/core/errors.hpp"
#include "nia/core/search_context.hpp"

namespace nia::algo {

PheromoneMatrix::PheromoneMatrix(Eigen::Index n, double initial, double floor)
    : tau_(Eigen::MatrixXd::Constant(n, n, std::max(initial, floor))), floor_(floor) {
  if (!(floor > 0.0)) throw InvalidParams("pheromone floor must be > 0");
}

void PheromoneMatrix::set(Eigen::Index i, Eigen::Index j, double value) {
  tau_(i, j) = tau_(j, i) = std::max(floor_, value);
}

void PheromoneMatrix::evaporate(double rho) { tau_ = (tau_ * (1.0 - rho)).cwiseMax(floor_); }

void PheromoneMatrix::deposit(const Permutation& tour, double amount) {
  const std::size_t n = tour.size();
  for (std::size_t k = 0; k < n; ++k) {
    const int a = tour[k];
    const int b = tour[(k + 1) % n];
    set(a, b, tau_(a, b) + amount);
  }
}

Eigen::VectorXd aco_transition_probability(int current, std::span<const int> unvisited, const PheromoneMatrix& tau,
                                           const Eigen::MatrixXd& distances, const AcoParams& params) {
  if (unvisited.empty()) throw InvalidParams("aco: no unvisited city to move to");
  Eigen::VectorXd p(static_cast<Eigen::Index>(unvisited.size()));
  for (std::size_t k = 0; k < unvisited.size(); ++k) {
    const int j = unvisited[k];
    const double eta = 1.0 / std::max(distances(current, j), kMinHeuristicDistance);
    p(static_cast<Eigen::Index>(k)) = std::pow(tau(current, j), params.alpha) * std::pow(eta, params.beta);
  }
  const double total = p.sum();
  if (!(total > 0.0) || !std::isfinite(total)) return Eigen::VectorXd::Constant(p.size(), 1.0 / p.size());
  return p / total;
}

void aco_update_pheromone(PheromoneMatrix& tau, std::span<const ScoredTour> tours, const AcoParams& params) {
  tau.evaporate(params.rho);
  if (tours.empty()) return;
  if (params.deposit == DepositPolicy::GlobalBest) {
    const auto best = std::min_element(tours.begin(), tours.end(),
                                       [](const ScoredTour& a, const ScoredTour& b) { return a.length < b.length; });
    tau.deposit(best->tour, params.q / best->length);
  } else {
    for (const auto& t : tours) tau.deposit(t.tour, params.q / t.length);
  }
}

RunRecord aco_run(const Problem& problem, const AcoParams& params, const Budget& budget, std::uint64_t seed) {
  params.validate();
  if (kind_of(problem.encoding) != EncodingKind::Permutation || !problem.distances ||
      problem.sense != ObjectiveSense::Minimize) {
    throw EncodingMismatch("aco needs a minimizing permutation problem with distances");
  }
  const Eigen::MatrixXd& dist = *problem.distances;
  const auto n = static_cast<int>(length_of(problem.encoding));
  if (dist.rows() != n || dist.cols() != n) throw InvalidParams("aco: distance matrix size mismatch");

  SearchContext ctx(problem, budget, seed);
  auto& rng = ctx.rng();
  PheromoneMatrix tau(n, params.initial_pheromone, params.tau_min);
  const std::size_t ants = params.ant_count == 0 ? static_cast<std::size_t>(n) : params.ant_count;

  std::vector<ScoredTour> iteration_tours;
  std::vector<int> unvisited;
  while (!ctx.exhausted()) {
    iteration_tours.clear();
    for (std::size_t a = 0; a < ants && !ctx.exhausted(); ++a) {
      Genome genome = Permutation{};
      auto& tour = std::get<Permutation>(genome);
      tour.reserve(static_cast<std::size_t>(n));
      unvisited.resize(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) unvisited[static_cast<std::size_t>(c)] = c;
      int current = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      tour.push_back(current);
      unvisited.erase(unvisited.begin() + current);
      while (!unvisited.empty()) {
        const Eigen::VectorXd p = aco_transition_probability(current, unvisited, tau, dist, params);
        double r = rng.uniform();
        std::size_t pick = unvisited.size() - 1;
        for (std::size_t k = 0; k < unvisited.size(); ++k) {
          if (r < p(static_cast<Eigen::Index>(k))) {
            pick = k;
            break;
          }
          r -= p(static_cast<Eigen::Index>(k));
        }
        current = unvisited[pick];
        tour.push_back(current);
        unvisited.erase(unvisited.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      const double length = ctx.evaluate(genome);
      iteration_tours.push_back({std::get<Permutation>(genome), length});
    }
    if (params.deposit == DepositPolicy::GlobalBest && ctx.has_best()) {
      iteration_tours.insert(iteration_tours.begin(), ScoredTour{std::get<Permutation>(ctx.best()), ctx.best_fitness()});
    }
    aco_update_pheromone(tau, iteration_tours, params);
    ctx.end_iteration();
  }
  return ctx.finish("aco", nlohmann::json(params));
}

RunRecord aco_run(const bench::TspInstance& instance, const AcoParams& params, const Budget& budget,
                  std::uint64_t seed) {
  instance.validate();
  return aco_run(bench::make_tsp_problem(instance), params, budget, seed);
}

}  // namespace nia::algo
