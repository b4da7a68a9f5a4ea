#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nia/core/budget.hpp"
#include "nia/core/encoding.hpp"

namespace nia {

/// Pure objective: equal genomes must map to equal values.
using Objective = std::function<double(const Genome&)>;

/// In-place repair applied before every evaluation (the repaired genome is
/// what the solver keeps).
using Repair = std::function<void(Genome&)>;

struct Problem {
  std::string name;
  Encoding encoding;
  ObjectiveSense sense = ObjectiveSense::Minimize;
  Objective objective;
  Repair repair;
  /// Pairwise distances for permutation problems; required by ACO.
  std::optional<Eigen::MatrixXd> distances;
  /// Optional seeds for the initial population/incumbent, used first.
  std::vector<Genome> initial;
};

}  // namespace nia
