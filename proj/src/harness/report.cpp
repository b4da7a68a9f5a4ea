#include "nia/harness/report.hpp"

#include <fstream>
#include <sstream>

#include "nia/benchmarks/instance_io.hpp"
#include "nia/core/errors.hpp"

namespace nia::harness {

using nlohmann::json;
using bench::format_number;

namespace {

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j) {
  return j.is_null() ? std::nullopt : std::optional<double>(j.get<double>());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::string to_csv(const TimingReport& report) {
  std::ostringstream out;
  out << kTimingCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.algorithm << ',' << format_number(r.median_ms) << ',' << format_number(r.best_value)
        << ',' << opt_number(r.optimum) << ',' << opt_number(r.ratio) << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<RunRecord>& runs) {
  std::ostringstream out;
  out << kRunCsvHeader << '\n';
  for (const auto& r : runs) {
    out << r.algorithm << ',' << r.seed << ',' << format_number(r.best_fitness) << ',' << r.evaluations << ','
        << r.iterations << ',' << to_string(r.stop_reason) << ',' << format_number(r.wall_time_ms) << '\n';
  }
  return out.str();
}

json to_json(const TimingReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"capacity", r.capacity},
                    {"algorithm", r.algorithm},
                    {"median_ms", r.median_ms},
                    {"best_value", r.best_value},
                    {"optimum", opt_json(r.optimum)},
                    {"ratio", opt_json(r.ratio)}});
  }
  return {{"rows", rows},
          {"slopes", report.slopes},
          {"tightness", report.tightness},
          {"repetitions", report.repetitions},
          {"seed", report.seed},
          {"ga_evaluations", report.ga_evaluations}};
}

TimingReport timing_report_from_json(const json& j) {
  TimingReport report;
  try {
    for (const auto& r : j.at("rows")) {
      report.rows.push_back({r.at("n").get<std::size_t>(), r.at("capacity").get<std::int64_t>(),
                             r.at("algorithm").get<std::string>(), r.at("median_ms").get<double>(),
                             r.at("best_value").get<double>(), opt_from(r.at("optimum")), opt_from(r.at("ratio"))});
    }
    report.slopes = j.at("slopes").get<std::map<std::string, double>>();
    report.tightness = j.at("tightness").get<double>();
    report.repetitions = j.at("repetitions").get<std::size_t>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.ga_evaluations = j.at("ga_evaluations").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed timing report: ") + e.what());
  }
  return report;
}

json to_json(const std::vector<RunRecord>& runs) {
  json arr = json::array();
  for (const auto& r : runs) arr.push_back(nia::to_json(r));
  return {{"runs", arr}};
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

void emit_report(const TimingReport& report, ReportFormat format, const std::filesystem::path& path) {
  if (report.rows.empty()) throw InvalidParams("refusing to emit an empty report");
  write_file(path, format == ReportFormat::Csv ? to_csv(report) : canonical(to_json(report)));
}

void emit_report(const std::vector<RunRecord>& runs, ReportFormat format, const std::filesystem::path& path) {
  if (runs.empty()) throw InvalidParams("refusing to emit an empty report");
  write_file(path, format == ReportFormat::Csv ? to_csv(runs) : canonical(to_json(runs)));
}

ReportFormat format_from_extension(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".csv") return ReportFormat::Csv;
  if (ext == ".json") return ReportFormat::Json;
  throw InvalidParams("report path must end in .csv or .json: " + path.string());
}

}  // namespace nia::harness
