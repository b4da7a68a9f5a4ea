#include "nia/harness/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nia/algorithms/aco.hpp"
#include "nia/algorithms/foa.hpp"
#include "nia/algorithms/ga.hpp"
#include "nia/benchmarks/generators.hpp"
#include "nia/benchmarks/holt_winters.hpp"
#include "nia/benchmarks/instance_io.hpp"
#include "nia/benchmarks/knapsack.hpp"
#include "nia/benchmarks/tsp.hpp"
#include "nia/core/errors.hpp"
#include "nia/core/optimizer.hpp"
#include "nia/harness/bench.hpp"
#include "nia/harness/report.hpp"
#include "nia/taxonomy/recommender.hpp"

namespace nia::harness {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path resolve_output(const fs::path& path) {
  const char* dir = std::getenv("NIA_OUT_DIR");
  if (path.is_absolute() || !dir || !*dir) return path;
  return fs::path(dir) / path;
}

namespace {

/// Options shared by all leaf commands.
struct Common {
  std::uint64_t seed = 1;
  std::string record;
  std::string params;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

template <typename P>
P parse_params(const std::string& text) {
  P p;
  if (text.empty()) return p;
  try {
    json::parse(text).get_to(p);
  } catch (const json::exception& e) {
    throw InvalidParams(std::string("bad --params: ") + e.what());
  }
  p.validate();
  return p;
}

void maybe_record(const Common& c, const RunRecord& r) {
  if (c.record.empty()) return;
  const auto path = resolve_output(c.record);
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path.string());
  f << canonical(to_json(r));
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void write_text(const std::string& out_path, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
  if (out_path.empty()) {
    emit(out);
    return;
  }
  const auto path = resolve_output(out_path);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  emit(f);
  if (!f) throw IoError("write failed for " + path.string());
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nature-inspired metaheuristics, exact oracles and an end-goal taxonomy recommender", "nia"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", common.seed, "RNG seed")->capture_default_str();
  };

  // recommend
  std::vector<std::string> tags;
  std::size_t top = 10;
  std::string taxonomy_file, rules_file;
  auto* recommend = app.add_subcommand("recommend", "Map problem tags to nature-inspired algorithms");
  recommend->add_option("--tags", tags, "Goal, modality, cooperation and data-regime tags")->required()->delimiter(',');
  recommend->add_option("--top", top, "Number of candidates to list")->capture_default_str();
  recommend->add_option("--taxonomy", taxonomy_file, "Taxonomy JSON (default: bundled)");
  recommend->add_option("--rules", rules_file, "Rule table JSON (default: bundled)");
  add_common(recommend);

  // taxonomy ls | show
  auto* tax = app.add_subcommand("taxonomy", "Query the end-goal taxonomy");
  tax->require_subcommand(1);
  std::string ls_path, show_name;
  auto* ls = tax->add_subcommand("ls", "List sub-goals and algorithms under a path");
  ls->add_option("path", ls_path, "Path prefix such as Biology/ResourceSeeking");
  add_common(ls);
  auto* show = tax->add_subcommand("show", "Show one algorithm by name or alias");
  show->add_option("name", show_name)->required();
  add_common(show);

  // solve knapsack | tsp
  auto* solve = app.add_subcommand("solve", "Solve a problem instance");
  solve->require_subcommand(1);
  std::string in_file, algo;
  std::uint64_t evals = 0, iters = 0;
  auto* solve_knap = solve->add_subcommand("knapsack", "0-1 knapsack (text: 'n W' then 'v w' lines)");
  solve_knap->add_option("--algo", algo)->required()->check(CLI::IsMember({"dp", "brute", "mitm", "greedy", "ga"}));
  auto* solve_tsp = solve->add_subcommand("tsp", "Travelling salesman (TSPLIB subset)");
  solve_tsp->add_option("--algo", algo)->required()->check(CLI::IsMember({"brute", "bnb", "aco", "ga"}));
  double time_limit = 60.0;
  solve_tsp->add_option("--time-limit", time_limit, "Branch-and-bound limit in seconds")->capture_default_str();
  for (auto* cmd : {solve_knap, solve_tsp}) {
    cmd->add_option("--in", in_file, "Instance file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--evals", evals, "Evaluation budget for metaheuristics");
    cmd->add_option("--iters", iters, "Iteration budget for metaheuristics");
    cmd->add_option("--params", common.params, "Solver parameters as a JSON object");
    cmd->add_option("--record", common.record, "Write the run record (JSON) here");
    add_common(cmd);
  }

  // fit hw
  auto* fit = app.add_subcommand("fit", "Fit model parameters");
  fit->require_subcommand(1);
  auto* fit_hw = fit->add_subcommand("hw", "Multiplicative Holt-Winters (alpha, beta, gamma)");
  std::optional<int> season;
  double grid_step = 0.05;
  fit_hw->add_option("--in", in_file, "CSV with header t,y")->required()->check(CLI::ExistingFile);
  fit_hw->add_option("--algo", algo)->required()->check(CLI::IsMember({"foa", "grid"}));
  fit_hw->add_option("--season", season, "Season length (else read from the .json sidecar)");
  fit_hw->add_option("--evals", evals, "FOA evaluation budget (default 1800)");
  fit_hw->add_option("--step", grid_step, "Grid step")->capture_default_str();
  fit_hw->add_option("--params", common.params, "FOA parameters as a JSON object");
  fit_hw->add_option("--record", common.record, "Write the run record (JSON) here");
  add_common(fit_hw);

  // bench ga-vs-dp
  auto* bench_cmd = app.add_subcommand("bench", "Timing benchmarks");
  bench_cmd->require_subcommand(1);
  auto* ga_vs_dp = bench_cmd->add_subcommand("ga-vs-dp", "Knapsack DP versus GA wall time as n grows");
  BenchOptions bopts;
  std::string out_file;
  ga_vs_dp->add_option("--sizes", bopts.sizes, "Instance sizes")->required()->delimiter(',');
  ga_vs_dp->add_option("--rho", bopts.tightness, "Capacity tightness")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  ga_vs_dp->add_option("--reps", bopts.repetitions, "Timed repetitions per cell")->capture_default_str()->check(CLI::PositiveNumber);
  ga_vs_dp->add_option("--evals", bopts.ga_evaluations, "GA evaluation budget")->capture_default_str();
  ga_vs_dp->add_option("--out", out_file, "Report file (.csv or .json)");
  add_common(ga_vs_dp);

  // gen knapsack | tsp | series
  auto* gen = app.add_subcommand("gen", "Generate seeded instances");
  gen->require_subcommand(1);
  std::size_t gen_n = 0;
  double rho = 0.5;
  std::string metric = "EUC_2D";
  int gen_season = 12, seasons = 10;
  auto* gen_knap = gen->add_subcommand("knapsack", "Random knapsack instance");
  gen_knap->add_option("--n", gen_n)->required()->check(CLI::PositiveNumber);
  gen_knap->add_option("--rho", rho, "Capacity tightness")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  auto* gen_tsp = gen->add_subcommand("tsp", "Random cities in the unit square");
  gen_tsp->add_option("--n", gen_n)->required()->check(CLI::Range(3, 1'000'000));
  gen_tsp->add_option("--metric", metric)->capture_default_str()->check(CLI::IsMember({"EUC_2D", "MAN_2D"}));
  auto* gen_series = gen->add_subcommand("series", "Synthetic seasonal series");
  gen_series->add_option("--season", gen_season)->capture_default_str()->check(CLI::Range(2, 1000));
  gen_series->add_option("--seasons", seasons)->capture_default_str()->check(CLI::Range(2, 100000));
  for (auto* cmd : {gen_knap, gen_tsp, gen_series}) {
    cmd->add_option("--out", out_file, "Output file (default: stdout)");
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    // Print the schema of the innermost command the user reached.
    CLI::App* cmd = &app;
    for (auto subs = cmd->get_subcommands(); !subs.empty(); subs = cmd->get_subcommands()) cmd = subs.front();
    err << cmd->help();
    return 2;
  }

  try {
    if (*recommend) {
      const auto taxonomy = taxonomy_file.empty() ? taxonomy::Taxonomy::bundled() : taxonomy::Taxonomy::load(taxonomy_file);
      const auto rules = rules_file.empty() ? taxonomy::RuleTable::bundled(taxonomy) : taxonomy::RuleTable::load(rules_file, taxonomy);
      const auto rec = taxonomy::triz_map(rules.parse_descriptor(tags), taxonomy, rules);
      out << "conceptual goal: " << rec.conceptual_goal.to_string() << '\n';
      for (std::size_t i = 0; i < rec.ranked.size() && i < top; ++i) {
        const auto& c = rec.ranked[i];
        char score[16];
        std::snprintf(score, sizeof score, "%.3f", c.score);
        out << i + 1 << ". " << c.entry->name << "  score " << score;
        if (c.entry->solver) out << "  [solver: " << c.entry->solver->id << "]";
        out << "\n   " << c.rationale << '\n';
      }
      return 0;
    }
    if (*ls) {
      const auto taxonomy = taxonomy::Taxonomy::bundled();
      const auto prefix = ls_path.empty() ? std::vector<std::string>{} : taxonomy.parse_prefix(ls_path);
      for (const auto& seg : taxonomy.child_segments(prefix)) out << seg << "/\n";
      if (!prefix.empty()) {
        for (const auto* e : taxonomy.children(ls_path)) {
          out << e->name;
          if (e->implemented) out << " (implemented)";
          out << '\n';
        }
      }
      return 0;
    }
    if (*show) {
      const auto taxonomy = taxonomy::Taxonomy::bundled();
      const auto& e = taxonomy.lookup(show_name);
      out << "name: " << e.name << '\n';
      for (const auto& p : e.paths) out << "path: " << p.to_string() << '\n';
      for (const auto& a : e.aliases) out << "alias: " << a << '\n';
      out << "implemented: " << (e.implemented ? "yes" : "no") << '\n';
      if (e.solver) out << "solver: " << e.solver->id << '\n';
      if (e.traditional) out << "traditional: " << *e.traditional << '\n';
      if (e.note) out << "note: " << *e.note << '\n';
      return 0;
    }
    if (*solve_knap) {
      const auto inst = bench::load_knapsack(in_file);
      bench::KnapsackSolution sol;
      if (algo == "dp") sol = bench::knapsack_dp(inst);
      else if (algo == "brute") sol = bench::knapsack_brute_force(inst);
      else if (algo == "mitm") sol = bench::knapsack_meet_in_middle(inst);
      else if (algo == "greedy") sol = bench::knapsack_greedy_dantzig(inst);
      else {
        Budget budget = Budget::evaluations(evals ? evals : 50'000);
        if (iters) budget.max_iterations = iters;
        const auto rec = algo::ga_run(bench::make_knapsack_problem(inst), parse_params<algo::GaParams>(common.params),
                                      budget, common.seed);
        const auto& bits = std::get<BitString>(rec.best);
        sol.value = bench::total_value(bits, inst);
        sol.weight = bench::total_weight(bits, inst);
        for (std::size_t i = 0; i < bits.size(); ++i) {
          if (bits[i]) sol.items.push_back(static_cast<int>(i));
        }
        maybe_record(common, rec);
      }
      out << "value " << bench::format_number(sol.value) << '\n'
          << "weight " << sol.weight << '\n'
          << "items " << join_ints(sol.items) << '\n';
      return 0;
    }
    if (*solve_tsp) {
      const auto inst = bench::load_tsplib(in_file);
      double length = 0.0;
      Permutation tour;
      if (algo == "brute") {
        auto s = bench::tsp_brute_force(inst);
        length = s.length;
        tour = std::move(s.tour);
      } else if (algo == "bnb") {
        auto s = bench::tsp_branch_and_bound(inst, std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000)));
        if (s.status == bench::SearchStatus::Incomplete) err << "warning: time limit reached; tour is the best found, not proven optimal\n";
        length = s.length;
        tour = std::move(s.tour);
      } else {
        RunRecord rec;
        if (algo == "aco") {
          Budget budget = Budget::iterations(iters ? iters : 200);
          if (evals) budget.max_evaluations = evals;
          rec = algo::aco_run(inst, parse_params<algo::AcoParams>(common.params), budget, common.seed);
        } else {
          Budget budget = Budget::evaluations(evals ? evals : 50'000);
          if (iters) budget.max_iterations = iters;
          rec = algo::ga_run(bench::make_tsp_problem(inst), parse_params<algo::GaParams>(common.params), budget, common.seed);
        }
        tour = std::get<Permutation>(rec.best);
        length = rec.best_fitness;
        maybe_record(common, rec);
      }
      out << "length " << fixed6(length) << '\n' << "tour " << join_ints(tour) << '\n';
      return 0;
    }
    if (*fit_hw) {
      const auto series = bench::load_series(in_file, season);
      if (algo == "grid") {
        const auto g = bench::hw_grid_oracle(series, grid_step);
        out << "alpha " << bench::format_number(g.params.alpha) << "\nbeta " << bench::format_number(g.params.beta)
            << "\ngamma " << bench::format_number(g.params.gamma) << "\nsse " << bench::format_number(g.sse)
            << "\nevaluations " << g.evaluations << '\n';
      } else {
        const auto rec = algo::foa_run(bench::make_hw_problem(series), parse_params<algo::FoaParams>(common.params),
                                       Budget::evaluations(evals ? evals : 1800), common.seed);
        const auto& x = std::get<Eigen::VectorXd>(rec.best);
        out << "alpha " << bench::format_number(x(0)) << "\nbeta " << bench::format_number(x(1)) << "\ngamma "
            << bench::format_number(x(2)) << "\nsse " << bench::format_number(rec.best_fitness) << "\nevaluations "
            << rec.evaluations << '\n';
        maybe_record(common, rec);
      }
      return 0;
    }
    if (*ga_vs_dp) {
      bopts.seed = common.seed;
      const auto report = bench_ga_vs_dp(bopts);
      out << to_csv(report);
      for (const auto& [name, slope] : report.slopes) out << "slope " << name << ' ' << bench::format_number(slope) << '\n';
      fs::path target = out_file;
      if (target.empty() && std::getenv("NIA_OUT_DIR")) target = "ga_vs_dp.csv";
      if (!target.empty()) {
        target = resolve_output(target);
        emit_report(report, format_from_extension(target), target);
        out << "wrote " << target.string() << '\n';
      }
      return 0;
    }
    if (*gen_knap) {
      const auto inst = bench::generate_knapsack(gen_n, common.seed, rho);
      write_text(out_file, out, [&](std::ostream& o) { bench::write_knapsack(o, inst); });
      return 0;
    }
    if (*gen_tsp) {
      const auto m = metric == "MAN_2D" ? bench::Metric::Manhattan : bench::Metric::Euclidean;
      const auto inst = bench::generate_tsp(gen_n, common.seed, m);
      const auto name = "random" + std::to_string(gen_n) + "-seed" + std::to_string(common.seed);
      write_text(out_file, out, [&](std::ostream& o) { bench::write_tsplib(o, inst, name); });
      return 0;
    }
    if (*gen_series) {
      const auto series = bench::generate_seasonal_series(common.seed, gen_season, seasons);
      write_text(out_file, out, [&](std::ostream& o) { bench::write_series_csv(o, series.values); });
      if (!out_file.empty()) bench::write_season_sidecar(resolve_output(out_file), gen_season);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace nia::harness
