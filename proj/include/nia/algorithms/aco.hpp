#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "nia/algorithms/params.hpp"
#include "nia/benchmarks/tsp.hpp"
#include "nia/core/problem.hpp"
#include "nia/core/run_record.hpp"

namespace nia::algo {

/// Symmetric edge attractiveness with a lower floor. The diagonal is unused.
class PheromoneMatrix {
 public:
  PheromoneMatrix(Eigen::Index n, double initial, double floor);

  Eigen::Index size() const { return tau_.rows(); }
  double floor() const { return floor_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return tau_(i, j); }
  const Eigen::MatrixXd& values() const { return tau_; }

  /// Sets both (i,j) and (j,i), clamped to the floor.
  void set(Eigen::Index i, Eigen::Index j, double value);
  /// tau <- max(floor, (1 - rho) * tau) on every entry.
  void evaporate(double rho);
  /// Adds `amount` to both directions of every edge of the closed tour.
  void deposit(const Permutation& tour, double amount);

 private:
  Eigen::MatrixXd tau_;
  double floor_;
};

/// Distances below this are treated as this for the heuristic 1/d.
inline constexpr double kMinHeuristicDistance = 1e-9;

/// p(j) proportional to tau(i,j)^alpha * (1/d(i,j))^beta over `unvisited`.
Eigen::VectorXd aco_transition_probability(int current, std::span<const int> unvisited, const PheromoneMatrix& tau,
                                           const Eigen::MatrixXd& distances, const AcoParams& params);

struct ScoredTour {
  Permutation tour;
  double length = 0.0;
};

/// Evaporates every edge by rho, then deposits q/L along the depositing
/// tours: only the shortest tour (first on ties) under GlobalBest, every
/// tour under AllAnts. The floor is enforced afterwards.
void aco_update_pheromone(PheromoneMatrix& tau, std::span<const ScoredTour> tours, const AcoParams& params);

/// Requires a minimizing permutation problem with a distance matrix.
RunRecord aco_run(const Problem& problem, const AcoParams& params, const Budget& budget, std::uint64_t seed);
RunRecord aco_run(const bench::TspInstance& instance, const AcoParams& params, const Budget& budget,
                  std::uint64_t seed);

}  // namespace nia::algo
