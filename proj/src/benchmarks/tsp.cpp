#include "nia/benchmarks/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>

#include "nia/core/errors.hpp"

namespace nia::bench {

std::string_view to_string(Metric metric) { return metric == Metric::Euclidean ? "EUC_2D" : "MAN_2D"; }

double metric_distance(Metric metric, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return metric == Metric::Euclidean ? (a - b).norm() : (a - b).cwiseAbs().sum();
}

double TspInstance::distance(Eigen::Index i, Eigen::Index j) const {
  return metric_distance(metric, coords.row(i).transpose(), coords.row(j).transpose());
}

Eigen::MatrixXd TspInstance::distance_matrix() const {
  const Eigen::Index n = size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) d(i, j) = d(j, i) = distance(i, j);
  }
  return d;
}

void TspInstance::validate() const {
  if (size() < 3) throw InvalidInstance("a TSP instance needs at least 3 cities");
  if (!coords.allFinite()) throw InvalidInstance("city coordinates must be finite");
}

double tour_length(const Permutation& tour, const Eigen::MatrixXd& distances) {
  if (tour.size() != static_cast<std::size_t>(distances.rows()) || !is_permutation_of_range(tour)) {
    throw InvalidTour("tour must visit every city exactly once");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < tour.size(); ++k) total += distances(tour[k], tour[(k + 1) % tour.size()]);
  return total;
}

double tour_length(const Permutation& tour, const TspInstance& instance) {
  if (tour.size() != static_cast<std::size_t>(instance.size()) || !is_permutation_of_range(tour)) {
    throw InvalidTour("tour must visit every city exactly once");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < tour.size(); ++k) total += instance.distance(tour[k], tour[(k + 1) % tour.size()]);
  return total;
}

TspSolution tsp_brute_force(const TspInstance& instance) {
  instance.validate();
  if (instance.size() > 10) throw TooLarge("brute force supports at most 10 cities");
  const Eigen::MatrixXd d = instance.distance_matrix();
  Permutation tour(static_cast<std::size_t>(instance.size()));
  std::iota(tour.begin(), tour.end(), 0);
  TspSolution best{std::numeric_limits<double>::infinity(), tour};
  do {
    const double len = tour_length(tour, d);
    if (len < best.length) best = {len, tour};
  } while (std::next_permutation(tour.begin() + 1, tour.end()));
  return best;
}

namespace {

Permutation nearest_neighbour(const Eigen::MatrixXd& d) {
  const auto n = static_cast<int>(d.rows());
  Permutation tour{0};
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  used[0] = true;
  for (int step = 1; step < n; ++step) {
    const int from = tour.back();
    int next = -1;
    for (int j = 0; j < n; ++j) {
      if (!used[static_cast<std::size_t>(j)] && (next < 0 || d(from, j) < d(from, next))) next = j;
    }
    used[static_cast<std::size_t>(next)] = true;
    tour.push_back(next);
  }
  return tour;
}

void two_opt(Permutation& tour, const Eigen::MatrixXd& d) {
  const std::size_t n = tour.size();
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i + 2 < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        const int a = tour[i], b = tour[i + 1], c = tour[j], e = tour[(j + 1) % n];
        if (a == e) continue;
        const double delta = d(a, c) + d(b, e) - d(a, b) - d(c, e);
        if (delta < -1e-12) {
          std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(i + 1),
                       tour.begin() + static_cast<std::ptrdiff_t>(j + 1));
          improved = true;
        }
      }
    }
  }
}

class BranchAndBound {
 public:
  BranchAndBound(const Eigen::MatrixXd& d, std::chrono::milliseconds limit)
      : d_(d), n_(static_cast<int>(d.rows())), deadline_(std::chrono::steady_clock::now() + limit) {}

  BranchAndBoundResult solve() {
    Permutation start = nearest_neighbour(d_);
    two_opt(start, d_);
    best_tour_ = start;
    best_len_ = tour_length(start, d_);

    path_.assign(1, 0);
    visited_.assign(static_cast<std::size_t>(n_), false);
    visited_[0] = true;
    dfs(0, 0.0);

    // Rotate so the tour starts at city 0.
    const auto zero = std::find(best_tour_.begin(), best_tour_.end(), 0);
    std::rotate(best_tour_.begin(), zero, best_tour_.end());
    return {best_len_, best_tour_, timed_out_ ? SearchStatus::Incomplete : SearchStatus::Complete, nodes_};
  }

 private:
  double lower_bound(int current, double cost) const {
    double first_from_current = std::numeric_limits<double>::infinity();
    double first_from_start = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int u = 0; u < n_; ++u) {
      if (visited_[static_cast<std::size_t>(u)]) continue;
      first_from_current = std::min(first_from_current, d_(current, u));
      first_from_start = std::min(first_from_start, d_(0, u));
      double m1 = std::numeric_limits<double>::infinity();
      double m2 = m1;
      auto consider = [&](double w) {
        if (w < m1) {
          m2 = m1;
          m1 = w;
        } else if (w < m2) {
          m2 = w;
        }
      };
      for (int v = 0; v < n_; ++v) {
        if (v == u) continue;
        if (!visited_[static_cast<std::size_t>(v)] || v == 0 || v == current) consider(d_(u, v));
      }
      sum += m1 + (std::isfinite(m2) ? m2 : m1);
    }
    return cost + 0.5 * (first_from_current + first_from_start + sum);
  }

  void dfs(int current, double cost) {
    ++nodes_;
    if (timed_out_ || ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)) {
      timed_out_ = true;
      return;
    }
    if (static_cast<int>(path_.size()) == n_) {
      const double len = cost + d_(current, 0);
      if (len < best_len_) {
        best_len_ = len;
        best_tour_ = path_;
      }
      return;
    }
    if (lower_bound(current, cost) > best_len_ * (1.0 + 1e-12)) return;

    std::vector<int> candidates;
    for (int u = 0; u < n_; ++u) {
      if (!visited_[static_cast<std::size_t>(u)]) candidates.push_back(u);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return d_(current, a) < d_(current, b); });
    for (int u : candidates) {
      const double next_cost = cost + d_(current, u);
      if (next_cost >= best_len_) continue;
      visited_[static_cast<std::size_t>(u)] = true;
      path_.push_back(u);
      dfs(u, next_cost);
      path_.pop_back();
      visited_[static_cast<std::size_t>(u)] = false;
      if (timed_out_) return;
    }
  }

  const Eigen::MatrixXd& d_;
  int n_;
  std::chrono::steady_clock::time_point deadline_;
  Permutation path_;
  std::vector<bool> visited_;
  Permutation best_tour_;
  double best_len_ = 0.0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

BranchAndBoundResult tsp_branch_and_bound(const TspInstance& instance, std::chrono::milliseconds time_limit) {
  instance.validate();
  const Eigen::MatrixXd d = instance.distance_matrix();
  return BranchAndBound(d, time_limit).solve();
}

Problem make_tsp_problem(const TspInstance& instance) {
  instance.validate();
  auto d = std::make_shared<const Eigen::MatrixXd>(instance.distance_matrix());
  Problem p;
  p.name = "tsp";
  p.encoding = PermutationEncoding{static_cast<std::size_t>(instance.size())};
  p.sense = ObjectiveSense::Minimize;
  p.objective = [d](const Genome& g) { return tour_length(std::get<Permutation>(g), *d); };
  p.distances = *d;
  return p;
}

}  // namespace nia::bench
