#pragma once

#include <wcov/coverage.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace wcov {

enum class ReportFormat { Csv, Text, All };

/// Writes coverage_overall.csv, coverage_by_scenario_<M>.csv and
/// coverage_by_operator_<M>.csv (Csv), summary.txt (Text), or both (All).
/// Returns the written file names. Output bytes depend only on `report`.
std::vector<std::string> emit_report(const CoverageReport& report, const std::filesystem::path& dir,
                                     ReportFormat format);

std::string render_overall_csv(const CoverageReport& report);
std::string render_table_csv(const CoverageTable& table);
std::string render_summary(const CoverageReport& report);

/// kill_matrix.csv and base_runs.csv: the raw analysis, enough to rebuild
/// every report.
void write_kill_matrix(const KillMatrix& matrix, const std::filesystem::path& dir);
KillMatrix read_kill_matrix(const std::filesystem::path& dir);

}  // namespace wcov
