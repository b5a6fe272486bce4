#pragma once

#include <wcov/mutation.hpp>
#include <wcov/oracles.hpp>
#include <wcov/planner.hpp>
#include <wcov/scenario.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wcov {

struct SuiteEntry {
  std::string id;
  std::filesystem::path file;
};

struct TestSuite {
  std::vector<SuiteEntry> entries;
};

/// Suite file: `{ "scenarios": [ { "id": "...", "path": "..." }, ... ] }`.
/// Relative paths resolve against `base_dir`. Throws ParseError/ValidationError.
TestSuite parse_suite(std::string_view text, const std::filesystem::path& base_dir);
TestSuite load_suite(const std::filesystem::path& file);

/// Loads every scenario of the suite; the suite id replaces the file's id.
std::vector<Scenario> load_suite_scenarios(const TestSuite& suite);

struct KillRecord {
  std::string scenario_id;
  std::size_t weight = 0;    ///< 1-based
  std::size_t op_index = 0;  ///< 1-based
  double factor = 1.0;
  std::array<bool, 3> verdicts{};  ///< indexed by oracle_slot
  std::optional<double> base_min_dis;
  std::optional<double> mutant_min_dis;
  double base_comfort = 0.0;
  double mutant_comfort = 0.0;

  bool killed(OracleKind k) const { return verdicts[oracle_slot(k)]; }
};

/// Outcome of the base (unmutated) run of one scenario.
struct BaseRun {
  std::string scenario_id;
  std::optional<double> min_dis;
  double comfort = 0.0;
  GuardFirings firings{};
  std::size_t fallbacks = 0;
};

struct KillMatrix {
  std::vector<std::string> scenario_ids;       ///< suite order
  std::vector<MutationOperator> operators;     ///< operator order
  std::vector<BaseRun> base_runs;              ///< one per scenario, suite order
  std::vector<KillRecord> records;             ///< sorted by (scenario, weight, operator)

  /// Throws Error unless records are exactly the |T| x 6 x |ops| product in order.
  void check_complete() const;
};

/// Plans every scenario once with `base` and once per mutant, then judges
/// every (scenario, mutant) cell with the three oracles. Cells run on up to
/// `jobs` threads; the result does not depend on `jobs`. With all thresholds
/// at 0, throws Error if any SO or CO kill is not also a PO kill.
KillMatrix evaluate_suite(std::span<const Scenario> suite, const Weights& base,
                          std::span<const MutationOperator> operators, const PlannerConfig& config,
                          const OracleThresholds& thresholds, unsigned jobs = 1);

/// covered(w_i, T, M): some record for weight i (1-based) is killed under M.
bool covered(const KillMatrix& matrix, std::size_t weight, OracleKind kind);

/// Boolean table with per-row and per-column true counts.
struct CoverageTable {
  std::string corner;                    ///< header of the label column ("s" or "K")
  std::vector<std::string> row_labels;
  std::vector<std::array<bool, kWeightCount>> cells;
  std::vector<std::size_t> row_counts;                ///< out of 6
  std::array<std::size_t, kWeightCount> column_counts{};  ///< out of row count
};

/// Cell (s, i) is true iff some operator kills weight i in scenario s.
CoverageTable per_scenario_table(const KillMatrix& matrix, OracleKind kind);

/// Cell (K, i) is true iff some scenario kills weight i under operator K.
CoverageTable per_operator_table(const KillMatrix& matrix, OracleKind kind);

struct CoverageReport {
  std::array<std::array<bool, 3>, kWeightCount> overall{};  ///< [weight][oracle]
  std::array<CoverageTable, 3> by_scenario;
  std::array<CoverageTable, 3> by_operator;
  /// Weights whose guard predicate never fired on a contending candidate in
  /// any base run: their mutants are equivalent on this suite.
  std::array<bool, kWeightCount> guard_never_fired{};
  bool have_guard_data = false;
};

CoverageReport build_report(const KillMatrix& matrix);

}  // namespace wcov
