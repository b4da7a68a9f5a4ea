#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "nia/algorithms/params.hpp"
#include "nia/core/problem.hpp"
#include "nia/core/run_record.hpp"
#include "nia/core/search_context.hpp"

namespace nia::algo {

/// Fruit fly swarm around a single incumbent (the swarm location).
///
/// Each iteration the swarm sends `swarm_size` flies to points drawn
/// uniformly from the ball of the current radius around the incumbent
/// (clamped into the box) and smells them with the objective. The swarm
/// flies to the best-smelling point only if it strictly improves on the
/// incumbent. After k completed iterations the radius is
/// `initial_radius * radius_decay^k`.
class FruitFlySwarm {
 public:
  /// Evaluates the initial incumbent: `problem.initial[0]` if given,
  /// otherwise a uniform point of the box.
  FruitFlySwarm(SearchContext& ctx, const FoaParams& params);

  /// One iteration; stops early if the budget runs out mid-swarm.
  void step();

  const Eigen::VectorXd& incumbent() const { return incumbent_; }
  double incumbent_fitness() const { return incumbent_fitness_; }
  double radius() const { return radius_; }
  double initial_radius() const { return initial_radius_; }
  std::uint64_t iteration() const { return iteration_; }

 private:
  SearchContext& ctx_;
  FoaParams params_;
  const RealVectorEncoding& box_;
  Eigen::VectorXd incumbent_;
  double incumbent_fitness_ = 0.0;
  double initial_radius_ = 0.0;
  double radius_ = 0.0;
  std::uint64_t iteration_ = 0;
};

/// Uniform point in the Euclidean ball of `radius` around `center`.
Eigen::VectorXd sample_in_ball(const Eigen::VectorXd& center, double radius, Rng& rng);

/// Throws EncodingMismatch for anything but a RealVector encoding.
RunRecord foa_run(const Problem& problem, const FoaParams& params, const Budget& budget, std::uint64_t seed);

}  // namespace nia::algo
