#include "nia/benchmarks/instance_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "nia/core/errors.hpp"

namespace nia::bench {

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

KnapsackInstance read_knapsack(std::istream& in) {
  std::size_t n = 0;
  KnapsackInstance inst;
  if (!(in >> n >> inst.capacity)) throw SchemaError("knapsack file: expected `n W` on line 1");
  inst.items.resize(n);
  for (auto& item : inst.items) {
    if (!(in >> item.value >> item.weight)) throw SchemaError("knapsack file: expected n lines `v w`");
  }
  std::string extra;
  if (in >> extra) throw SchemaError("knapsack file: trailing content after item lines");
  inst.validate();
  return inst;
}

void write_knapsack(std::ostream& out, const KnapsackInstance& instance) {
  out << instance.size() << ' ' << instance.capacity << '\n';
  for (const auto& item : instance.items) out << format_number(item.value) << ' ' << item.weight << '\n';
}

TspInstance read_tsplib(std::istream& in) {
  std::string line;
  long dimension = -1;
  std::optional<Metric> metric;
  bool coords_section = false;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (upper(t) == "NODE_COORD_SECTION") {
      coords_section = true;
      break;
    }
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw SchemaError("TSPLIB: unexpected line: " + t);
    const std::string key = upper(trim(t.substr(0, colon)));
    const std::string value = trim(t.substr(colon + 1));
    if (key == "DIMENSION") {
      try {
        dimension = std::stol(value);
      } catch (const std::exception&) {
        throw SchemaError("TSPLIB: bad DIMENSION");
      }
    } else if (key == "EDGE_WEIGHT_TYPE") {
      const auto v = upper(value);
      if (v == "EUC_2D") {
        metric = Metric::Euclidean;
      } else if (v == "MAN_2D") {
        metric = Metric::Manhattan;
      } else {
        throw SchemaError("TSPLIB: unsupported EDGE_WEIGHT_TYPE " + value);
      }
    } else if (key == "TYPE") {
      if (upper(value) != "TSP") throw SchemaError("TSPLIB: only TYPE TSP is supported");
    } else if (key != "NAME" && key != "COMMENT") {
      throw SchemaError("TSPLIB: unsupported key " + key);
    }
  }
  if (dimension < 0) throw SchemaError("TSPLIB: missing DIMENSION");
  if (!metric) throw SchemaError("TSPLIB: missing EDGE_WEIGHT_TYPE");
  if (!coords_section) throw SchemaError("TSPLIB: missing NODE_COORD_SECTION");

  TspInstance inst;
  inst.metric = *metric;
  inst.coords.resize(dimension, 2);
  std::vector<bool> seen(static_cast<std::size_t>(dimension), false);
  for (long k = 0; k < dimension; ++k) {
    long id = 0;
    double x = 0.0;
    double y = 0.0;
    if (!(in >> id >> x >> y)) throw SchemaError("TSPLIB: expected DIMENSION coordinate lines");
    if (id < 1 || id > dimension || seen[static_cast<std::size_t>(id - 1)]) {
      throw SchemaError("TSPLIB: node ids must be 1..DIMENSION, each once");
    }
    seen[static_cast<std::size_t>(id - 1)] = true;
    inst.coords(id - 1, 0) = x;
    inst.coords(id - 1, 1) = y;
  }
  std::string rest;
  while (in >> rest) {
    if (upper(rest) != "EOF") throw SchemaError("TSPLIB: unexpected trailing content");
  }
  inst.validate();
  return inst;
}

void write_tsplib(std::ostream& out, const TspInstance& instance, const std::string& name) {
  out << "NAME: " << name << '\n'
      << "TYPE: TSP\n"
      << "DIMENSION: " << instance.size() << '\n'
      << "EDGE_WEIGHT_TYPE: " << to_string(instance.metric) << '\n'
      << "NODE_COORD_SECTION\n";
  for (Eigen::Index i = 0; i < instance.size(); ++i) {
    out << (i + 1) << ' ' << format_number(instance.coords(i, 0)) << ' ' << format_number(instance.coords(i, 1))
        << '\n';
  }
  out << "EOF\n";
}

Eigen::VectorXd read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "t,y") throw SchemaError("series CSV: header must be `t,y`");
  std::vector<double> ys;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw SchemaError("series CSV: expected `t,y` rows");
    try {
      std::size_t used = 0;
      const std::string ytext = trim(t.substr(comma + 1));
      ys.push_back(std::stod(ytext, &used));
      if (used != ytext.size()) throw SchemaError("series CSV: bad y value");
    } catch (const std::invalid_argument&) {
      throw SchemaError("series CSV: bad y value");
    } catch (const std::out_of_range&) {
      throw SchemaError("series CSV: y value out of range");
    }
  }
  return Eigen::Map<const Eigen::VectorXd>(ys.data(), static_cast<Eigen::Index>(ys.size()));
}

void write_series_csv(std::ostream& out, const Eigen::VectorXd& values) {
  out << "t,y\n";
  for (Eigen::Index t = 0; t < values.size(); ++t) out << t << ',' << format_number(values(t)) << '\n';
}

std::filesystem::path series_sidecar_path(const std::filesystem::path& csv) {
  auto p = csv;
  p.replace_extension(".json");
  return p;
}

std::optional<int> read_season_sidecar(const std::filesystem::path& csv) {
  const auto path = series_sidecar_path(csv);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in = open_in(path);
  try {
    return nlohmann::json::parse(in).at("season_length").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("series sidecar: " + std::string(e.what()));
  }
}

void write_season_sidecar(const std::filesystem::path& csv, int season_length) {
  std::ofstream out(series_sidecar_path(csv));
  if (!out) throw IoError("cannot write sidecar for " + csv.string());
  out << nlohmann::json{{"season_length", season_length}}.dump() << '\n';
}

KnapsackInstance load_knapsack(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_knapsack(in);
}

TspInstance load_tsplib(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_tsplib(in);
}

TimeSeries load_series(const std::filesystem::path& path, std::optional<int> season_length) {
  auto in = open_in(path);
  TimeSeries s;
  s.values = read_series_csv(in);
  const auto m = season_length ? season_length : read_season_sidecar(path);
  if (!m) throw SchemaError("season length missing: pass --season or provide " + series_sidecar_path(path).string());
  s.season_length = *m;
  s.validate();
  return s;
}

}  // namespace nia::bench
