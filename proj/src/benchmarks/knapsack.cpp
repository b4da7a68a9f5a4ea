#include "nia/benchmarks/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "nia/core/errors.hpp"

namespace nia::bench {

void KnapsackInstance::validate() const {
  if (capacity < 0) throw InvalidInstance("knapsack capacity must be >= 0");
  for (const auto& item : items) {
    if (item.weight <= 0) throw InvalidInstance("knapsack weights must be positive integers");
    if (!(item.value >= 0.0) || !std::isfinite(item.value)) throw InvalidInstance("knapsack values must be >= 0");
  }
}

namespace {

KnapsackSolution from_mask(const KnapsackInstance& inst, std::uint64_t mask, std::size_t offset = 0) {
  KnapsackSolution s;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) {
      const auto& item = inst.items[offset + i];
      s.items.push_back(static_cast<int>(offset + i));
      s.value += item.value;
      s.weight += item.weight;
    }
  }
  return s;
}

struct Subset {
  std::int64_t weight;
  double value;
  std::uint64_t mask;
};

std::vector<Subset> enumerate(const KnapsackInstance& inst, std::size_t begin, std::size_t end) {
  const std::size_t k = end - begin;
  std::vector<Subset> out(std::size_t{1} << k);
  out[0] = {0, 0.0, 0};
  // Subset half+m is subset m plus item `bit`.
  for (std::size_t bit = 0; bit < k; ++bit) {
    const std::size_t half = std::size_t{1} << bit;
    const auto& item = inst.items[begin + bit];
    for (std::size_t m = 0; m < half; ++m) {
      out[half + m] = {out[m].weight + item.weight, out[m].value + item.value, out[m].mask | half};
    }
  }
  return out;
}

}  // namespace

KnapsackSolution knapsack_dp(const KnapsackInstance& instance, std::uint64_t max_cells) {
  instance.validate();
  const std::size_t n = instance.size();
  const auto W = static_cast<std::uint64_t>(instance.capacity);
  const long double cells = static_cast<long double>(n + 1) * static_cast<long double>(W + 1);
  if (cells > static_cast<long double>(max_cells)) throw CapacityOverflow("knapsack DP table exceeds the cell cap");

  const std::size_t cols = W + 1;
  std::vector<double> best(cols, 0.0);
  // take[i * cols + w] == 1 when item i-1 is taken in the optimum of the first i items at capacity w.
  std::vector<std::uint8_t> take((n + 1) * cols, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& item = instance.items[i - 1];
    const auto wi = static_cast<std::uint64_t>(item.weight);
    if (wi > W) continue;
    std::uint8_t* row = take.data() + i * cols;
    for (std::uint64_t w = W; w >= wi; --w) {
      const double with = best[w - wi] + item.value;
      if (with > best[w]) {
        best[w] = with;
        row[w] = 1;
      }
      if (w == wi) break;
    }
  }
  KnapsackSolution s;
  s.value = best[W];
  std::uint64_t w = W;
  for (std::size_t i = n; i >= 1; --i) {
    if (take[i * cols + w]) {
      s.items.push_back(static_cast<int>(i - 1));
      s.weight += instance.items[i - 1].weight;
      w -= static_cast<std::uint64_t>(instance.items[i - 1].weight);
    }
  }
  std::reverse(s.items.begin(), s.items.end());
  return s;
}

KnapsackSolution knapsack_brute_force(const KnapsackInstance& instance) {
  instance.validate();
  if (instance.size() > 25) throw TooLarge("brute force supports at most 25 items");
  const auto subsets = enumerate(instance, 0, instance.size());
  const Subset* best = &subsets[0];
  for (const auto& s : subsets) {
    if (s.weight <= instance.capacity && s.value > best->value) best = &s;
  }
  return from_mask(instance, best->mask);
}

KnapsackSolution knapsack_greedy_dantzig(const KnapsackInstance& instance) {
  instance.validate();
  std::vector<int> order(instance.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ia = instance.items[static_cast<std::size_t>(a)];
    const auto& ib = instance.items[static_cast<std::size_t>(b)];
    // va/wa > vb/wb without division
    return ia.value * static_cast<double>(ib.weight) > ib.value * static_cast<double>(ia.weight);
  });
  KnapsackSolution s;
  for (int i : order) {
    const auto& item = instance.items[static_cast<std::size_t>(i)];
    if (s.weight + item.weight <= instance.capacity) {
      s.weight += item.weight;
      s.value += item.value;
      s.items.push_back(i);
    }
  }
  std::sort(s.items.begin(), s.items.end());
  return s;
}

KnapsackSolution knapsack_meet_in_middle(const KnapsackInstance& instance) {
  instance.validate();
  const std::size_t n = instance.size();
  if (n > 40) throw TooLarge("meet-in-the-middle supports at most 40 items");
  const std::size_t split = n / 2;
  const auto left = enumerate(instance, 0, split);
  auto right = enumerate(instance, split, n);

  std::sort(right.begin(), right.end(), [](const Subset& a, const Subset& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.value > b.value;
  });
  // Keep only subsets strictly more valuable than every lighter one.
  std::vector<Subset> frontier;
  for (const auto& s : right) {
    if (s.weight > instance.capacity) break;
    if (frontier.empty() || s.value > frontier.back().value) frontier.push_back(s);
  }

  double best_value = -1.0;
  std::uint64_t best_left = 0;
  std::uint64_t best_right = 0;
  for (const auto& l : left) {
    if (l.weight > instance.capacity) continue;
    const std::int64_t room = instance.capacity - l.weight;
    auto it = std::upper_bound(frontier.begin(), frontier.end(), room,
                               [](std::int64_t w, const Subset& s) { return w < s.weight; });
    if (it == frontier.begin()) continue;
    --it;
    if (l.value + it->value > best_value) {
      best_value = l.value + it->value;
      best_left = l.mask;
      best_right = it->mask;
    }
  }
  KnapsackSolution a = from_mask(instance, best_left);
  const KnapsackSolution b = from_mask(instance, best_right, split);
  a.items.insert(a.items.end(), b.items.begin(), b.items.end());
  a.weight += b.weight;
  a.value = best_value;
  return a;
}

std::vector<int> repair_order(const KnapsackInstance& instance) {
  std::vector<int> order(instance.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ia = instance.items[static_cast<std::size_t>(a)];
    const auto& ib = instance.items[static_cast<std::size_t>(b)];
    return ia.value * static_cast<double>(ib.weight) < ib.value * static_cast<double>(ia.weight);
  });
  return order;
}

void repair_bitstring(BitString& bits, const KnapsackInstance& instance, const std::vector<int>& order) {
  std::int64_t weight = total_weight(bits, instance);
  for (auto it = order.begin(); weight > instance.capacity && it != order.end(); ++it) {
    const auto i = static_cast<std::size_t>(*it);
    if (bits[i]) {
      bits[i] = 0;
      weight -= instance.items[i].weight;
    }
  }
}

double total_value(const BitString& bits, const KnapsackInstance& instance) {
  double v = 0.0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) v += instance.items[i].value;
  }
  return v;
}

std::int64_t total_weight(const BitString& bits, const KnapsackInstance& instance) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) w += instance.items[i].weight;
  }
  return w;
}

CandidateSolution knapsack_ga_decode(const BitString& bits, const KnapsackInstance& instance) {
  if (bits.size() != instance.size()) throw EncodingMismatch("bitstring length differs from item count");
  BitString repaired = bits;
  repair_bitstring(repaired, instance, repair_order(instance));
  CandidateSolution s;
  s.fitness = total_value(repaired, instance);
  s.feasible = total_weight(repaired, instance) <= instance.capacity;
  s.value = std::move(repaired);
  return s;
}

Problem make_knapsack_problem(const KnapsackInstance& instance) {
  instance.validate();
  auto inst = std::make_shared<const KnapsackInstance>(instance);
  auto order = std::make_shared<const std::vector<int>>(repair_order(instance));
  Problem p;
  p.name = "knapsack";
  p.encoding = BitstringEncoding{instance.size()};
  p.sense = ObjectiveSense::Maximize;
  p.repair = [inst, order](Genome& g) { repair_bitstring(std::get<BitString>(g), *inst, *order); };
  p.objective = [inst](const Genome& g) { return total_value(std::get<BitString>(g), *inst); };
  return p;
}

}  // namespace nia::bench
