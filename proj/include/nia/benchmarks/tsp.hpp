#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

#include "nia/core/encoding.hpp"
#include "nia/core/problem.hpp"

namespace nia::bench {

enum class Metric { Euclidean, Manhattan };

std::string_view to_string(Metric metric);

/// Cities in the plane, one per row of `coords`.
struct TspInstance {
  Eigen::Matrix<double, Eigen::Dynamic, 2> coords;
  Metric metric = Metric::Euclidean;

  Eigen::Index size() const { return coords.rows(); }
  double distance(Eigen::Index i, Eigen::Index j) const;
  /// Symmetric, zero diagonal.
  Eigen::MatrixXd distance_matrix() const;
  /// Throws InvalidInstance when fewer than 3 cities or coordinates are not finite.
  void validate() const;
};

double metric_distance(Metric metric, const Eigen::Vector2d& a, const Eigen::Vector2d& b);

/// Closed-cycle length including the return edge. Throws InvalidTour.
double tour_length(const Permutation& tour, const TspInstance& instance);
double tour_length(const Permutation& tour, const Eigen::MatrixXd& distances);

struct TspSolution {
  double length = 0.0;
  Permutation tour;
};

/// Exhaustive search with city 0 fixed as the start; n <= 10, else TooLarge.
TspSolution tsp_brute_force(const TspInstance& instance);

enum class SearchStatus { Complete, Incomplete };

struct BranchAndBoundResult {
  double length = 0.0;
  Permutation tour;
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t nodes = 0;
};

/// Depth-first branch and bound from city 0. Lower bound at a node with
/// partial path P ending at c and unvisited set U:
///   cost(P) + 1/2 * ( min_{u in U} d(c,u) + min_{u in U} d(0,u)
///                     + sum_{u in U} (two cheapest edges from u into U + {0, c}) )
/// The incumbent starts from nearest neighbour + 2-opt. Returns Incomplete
/// with the best incumbent when `time_limit` elapses.
BranchAndBoundResult tsp_branch_and_bound(const TspInstance& instance,
                                          std::chrono::milliseconds time_limit = std::chrono::seconds(60));

/// Permutation problem minimizing tour length, with the distance matrix
/// attached for ACO.
Problem make_tsp_problem(const TspInstance& instance);

}  // namespace nia::bench
