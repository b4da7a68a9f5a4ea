#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nia/core/encoding.hpp"
#include "nia/core/problem.hpp"

namespace nia::bench {

struct KnapsackItem {
  double value = 0.0;      // >= 0
  std::int64_t weight = 1;  // > 0
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  std::int64_t capacity = 0;  // >= 0

  std::size_t size() const { return items.size(); }
  /// Throws InvalidInstance.
  void validate() const;
};

struct KnapsackSolution {
  double value = 0.0;
  std::int64_t weight = 0;
  /// Chosen item indices, ascending.
  std::vector<int> items;
};

/// Default DP table cap in cells, (n+1)*(W+1).
inline constexpr std::uint64_t kDefaultDpCellCap = 100'000'000;

/// Exact O(nW) dynamic program. The decision table is (n+1) x (W+1) bytes;
/// throws CapacityOverflow when that exceeds `max_cells`.
KnapsackSolution knapsack_dp(const KnapsackInstance& instance, std::uint64_t max_cells = kDefaultDpCellCap);

/// Exact subset enumeration; n <= 25, else TooLarge.
KnapsackSolution knapsack_brute_force(const KnapsackInstance& instance);

/// Items in non-increasing value/weight order (ties by index), each taken if
/// it still fits.
KnapsackSolution knapsack_greedy_dantzig(const KnapsackInstance& instance);

/// Exact meet-in-the-middle: enumerate both halves, keep the Pareto frontier
/// of the second half sorted by weight, binary-search the best partner for
/// every first-half subset. n <= 40, else TooLarge.
KnapsackSolution knapsack_meet_in_middle(const KnapsackInstance& instance);

/// Item order used by repair: increasing value/weight, ties by index.
std::vector<int> repair_order(const KnapsackInstance& instance);

/// Drops chosen items in `order` (the repair order) until the bitstring fits.
void repair_bitstring(BitString& bits, const KnapsackInstance& instance, const std::vector<int>& order);

/// Repair decoding: feasible solution whose fitness is its total value.
CandidateSolution knapsack_ga_decode(const BitString& bits, const KnapsackInstance& instance);

/// Maximizing bitstring problem whose repair hook applies repair decoding
/// (so the GA keeps repaired genomes) and whose objective is total value.
Problem make_knapsack_problem(const KnapsackInstance& instance);

double total_value(const BitString& bits, const KnapsackInstance& instance);
std::int64_t total_weight(const BitString& bits, const KnapsackInstance& instance);

}  // namespace nia::bench
