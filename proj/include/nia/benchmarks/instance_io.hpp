#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "nia/benchmarks/holt_winters.hpp"
#include "nia/benchmarks/knapsack.hpp"
#include "nia/benchmarks/tsp.hpp"

namespace nia::bench {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_number(double v);

/// Knapsack text: line 1 `n W`, then n lines `v_i w_i`.
KnapsackInstance read_knapsack(std::istream& in);
void write_knapsack(std::ostream& out, const KnapsackInstance& instance);

/// TSPLIB subset: header keys NAME, TYPE, COMMENT, DIMENSION,
/// EDGE_WEIGHT_TYPE (EUC_2D | MAN_2D), then NODE_COORD_SECTION with
/// `index x y` lines and an optional EOF. Distances are not rounded.
TspInstance read_tsplib(std::istream& in);
void write_tsplib(std::ostream& out, const TspInstance& instance, const std::string& name = "generated");

/// CSV with header `t,y`; returns y in file order.
Eigen::VectorXd read_series_csv(std::istream& in);
void write_series_csv(std::ostream& out, const Eigen::VectorXd& values);

/// Sidecar path for a series file: same path with a .json extension,
/// holding `{"season_length": m}`.
std::filesystem::path series_sidecar_path(const std::filesystem::path& csv);
std::optional<int> read_season_sidecar(const std::filesystem::path& csv);
void write_season_sidecar(const std::filesystem::path& csv, int season_length);

/// File-path conveniences; throw IoError when the file cannot be opened.
KnapsackInstance load_knapsack(const std::filesystem::path& path);
TspInstance load_tsplib(const std::filesystem::path& path);
/// `season_length` overrides the sidecar; one of them must be present.
TimeSeries load_series(const std::filesystem::path& path, std::optional<int> season_length);

}  // namespace nia::bench
