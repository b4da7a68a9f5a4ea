#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nia/core/run_record.hpp"
#include "nia/harness/bench.hpp"

namespace nia::harness {

enum class ReportFormat { Csv, Json };

/// Columns: n,algorithm,median_ms,best_value,optimum,ratio (empty when unknown).
inline constexpr const char* kTimingCsvHeader = "n,algorithm,median_ms,best_value,optimum,ratio";
/// Columns: algorithm,seed,best_fitness,evaluations,iterations,stop_reason,wall_time_ms.
inline constexpr const char* kRunCsvHeader = "algorithm,seed,best_fitness,evaluations,iterations,stop_reason,wall_time_ms";

std::string to_csv(const TimingReport& report);
std::string to_csv(const std::vector<RunRecord>& runs);

nlohmann::json to_json(const TimingReport& report);
TimingReport timing_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<RunRecord>& runs);

/// Two-space indented dump with a trailing newline; keys are sorted.
std::string canonical(const nlohmann::json& j);

/// Throws InvalidParams on an empty report and IoError when the file cannot be written.
void emit_report(const TimingReport& report, ReportFormat format, const std::filesystem::path& path);
void emit_report(const std::vector<RunRecord>& runs, ReportFormat format, const std::filesystem::path& path);

/// ".csv" or ".json"; throws InvalidParams otherwise.
ReportFormat format_from_extension(const std::filesystem::path& path);

}  // namespace nia::harness
