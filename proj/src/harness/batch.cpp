#include "nia/harness/batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "nia/benchmarks/generators.hpp"
#include "nia/benchmarks/knapsack.hpp"
#include "nia/benchmarks/tsp.hpp"
#include "nia/core/errors.hpp"
#include "nia/core/optimizer.hpp"
#include "nia/core/rng.hpp"

namespace nia::harness {

std::vector<RunRecord> run_batch(const std::vector<BatchCell>& cells, unsigned threads) {
  std::vector<RunRecord> out(cells.size());
  auto run_one = [&](std::size_t i) {
    const auto& c = cells[i];
    if (!c.problem) throw InvalidParams("batch cell without a problem");
    out[i] = run_optimizer(*c.problem, c.config, c.budget, c.seed);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

void ExperimentSpec::validate() const {
  if (repetitions < 1) throw InvalidParams("repetitions must be at least 1");
  if (sizes.empty()) throw InvalidParams("size sweep is empty");
  if (instance_seeds.empty()) throw InvalidParams("no instance seeds");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw InvalidParams("size sweep must be strictly increasing");
  }
  if (algorithm) budget.validate();
}

namespace {

RunRecord oracle_record(const Problem& problem, Genome best, double value, std::uint64_t seed) {
  RunRecord r;
  r.algorithm = "oracle";
  r.config = nlohmann::json::object();
  r.seed = seed;
  r.sense = problem.sense;
  r.best = std::move(best);
  r.best_fitness = value;
  r.history.emplace_back(0, value);
  r.stop_reason = StopReason::Converged;
  return r;
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentSpec& spec, unsigned threads) {
  spec.validate();
  std::vector<std::unique_ptr<Problem>> problems;
  std::vector<BatchCell> cells;
  std::vector<RunRecord> oracle;
  for (std::size_t n : spec.sizes) {
    for (std::uint64_t s : spec.instance_seeds) {
      if (spec.family == ProblemFamily::Knapsack) {
        const auto inst = bench::generate_knapsack(n, s, spec.tightness);
        problems.push_back(std::make_unique<Problem>(bench::make_knapsack_problem(inst)));
        if (!spec.algorithm) {
          const auto sol = bench::knapsack_dp(inst);
          BitString bits(n, 0);
          for (int i : sol.items) bits[static_cast<std::size_t>(i)] = 1;
          for (std::size_t r = 0; r < spec.repetitions; ++r) oracle.push_back(oracle_record(*problems.back(), bits, sol.value, s));
        }
      } else {
        const auto inst = bench::generate_tsp(n, s);
        problems.push_back(std::make_unique<Problem>(bench::make_tsp_problem(inst)));
        if (!spec.algorithm) {
          const auto sol = bench::tsp_branch_and_bound(inst);
          for (std::size_t r = 0; r < spec.repetitions; ++r) oracle.push_back(oracle_record(*problems.back(), sol.tour, sol.length, s));
        }
      }
      if (spec.algorithm) {
        for (std::size_t r = 0; r < spec.repetitions; ++r) {
          cells.push_back({problems.back().get(), *spec.algorithm, spec.budget, mix64(s ^ (n << 20)) + r});
        }
      }
    }
  }
  return spec.algorithm ? run_batch(cells, threads) : oracle;
}

}  // namespace nia::harness
