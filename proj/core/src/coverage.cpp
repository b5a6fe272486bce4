#include <wcov/coverage.hpp>
#include <wcov/errors.hpp>
#include <wcov/metrics.hpp>
#include <wcov/scenario_io.hpp>

#include "json_util.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <set>
#include <thread>

namespace wcov {

using detail::Json;

TestSuite parse_suite(std::string_view text, const std::filesystem::path& base_dir) {
  using namespace detail;
  const Json root = parse_json(text);
  require_object(root, "");
  reject_unknown(root, "", {"scenarios"});
  const Json& list = as_array(require_key(root, "", "scenarios"), "/scenarios");
  TestSuite suite;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = child("/scenarios", i);
    const Json& e = require_object(list[i], p);
    reject_unknown(e, p, {"id", "path"});
    SuiteEntry entry;
    entry.id = as_string(require_key(e, p, "id"), child(p, "id"));
    std::filesystem::path file = as_string(require_key(e, p, "path"), child(p, "path"));
    entry.file = file.is_absolute() ? file : base_dir / file;
    if (!ids.insert(entry.id).second) throw ValidationError(child(p, "id"), "duplicate scenario id '" + entry.id + "'");
    suite.entries.push_back(std::move(entry));
  }
  if (suite.entries.empty()) throw ValidationError("/scenarios", "suite needs at least one scenario");
  return suite;
}

TestSuite load_suite(const std::filesystem::path& file) {
  return parse_suite(read_text_file(file), file.parent_path());
}

std::vector<Scenario> load_suite_scenarios(const TestSuite& suite) {
  std::vector<Scenario> out;
  out.reserve(suite.entries.size());
  for (const SuiteEntry& e : suite.entries) {
    Scenario s;
    try {
      s = load_scenario(e.file);
    } catch (const ParseError& err) {
      throw ParseError(err.field(), e.file.string() + ": " + err.detail());
    } catch (const ValidationError& err) {
      throw ValidationError(err.field(), e.file.string() + ": " + err.detail());
    }
    s.id = e.id;
    out.push_back(std::move(s));
  }
  return out;
}

void KillMatrix::check_complete() const {
  const std::size_t expected = scenario_ids.size() * kWeightCount * operators.size();
  if (records.size() != expected) {
    throw Error("kill matrix has " + std::to_string(records.size()) + " records, expected " + std::to_string(expected));
  }
  std::size_t r = 0;
  for (const auto& sid : scenario_ids) {
    for (std::size_t i = 1; i <= kWeightCount; ++i) {
      for (const auto& op : operators) {
        const KillRecord& rec = records[r++];
        if (rec.scenario_id != sid || rec.weight != i || rec.op_index != op.index) {
          throw Error("kill matrix record " + std::to_string(r - 1) + " out of order");
        }
      }
    }
  }
}

namespace {

// Runs fn(0..count-1) on up to `jobs` threads. Exceptions are collected per
// index and the lowest failing index is rethrown, so failures do not depend
// on scheduling.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <typename E>
[[noreturn]] void rethrow_annotated(const E& e, const std::string& where) {
  throw E(where + ": " + e.what());
}

[[noreturn]] void annotate(const std::string& where) {
  try {
    throw;
  } catch (const ParseError& e) {
    throw ParseError(e.field(), where + ": " + e.detail());
  } catch (const ValidationError& e) {
    throw ValidationError(e.field(), where + ": " + e.detail());
  } catch (const InvalidTimeout& e) {
    rethrow_annotated(e, where);
  } catch (const InvalidStep& e) {
    rethrow_annotated(e, where);
  } catch (const LengthMismatch& e) {
    rethrow_annotated(e, where);
  } catch (const std::exception& e) {
    throw Error(where + ": " + e.what());
  }
}

}  // namespace

KillMatrix evaluate_suite(std::span<const Scenario> suite, const Weights& base,
                          std::span<const MutationOperator> operators, const PlannerConfig& config,
                          const OracleThresholds& thresholds, unsigned jobs) {
  if (suite.empty()) throw ValidationError("/scenarios", "suite needs at least one scenario");
  if (operators.empty()) throw ValidationError("/operators", "need at least one mutation operator");
  config.validate();
  validate(base);
  thresholds.validate();

  const std::vector<Mutant> mutants = generate_mutants(base, operators);

  KillMatrix km;
  km.operators.assign(operators.begin(), operators.end());
  for (const Scenario& s : suite) km.scenario_ids.push_back(s.id);

  struct BaseData {
    Path path;
    std::vector<Path> objects;
  };
  std::vector<BaseData> bases(suite.size());
  km.base_runs.resize(suite.size());

  parallel_for(suite.size(), jobs, [&](std::size_t si) {
    const Scenario& s = suite[si];
    try {
      PlanResult r = plan_traced(s, base, config);
      BaseData& b = bases[si];
      b.objects = object_paths(s, config);
      b.path = std::move(r.path);
      BaseRun& run = km.base_runs[si];
      run.scenario_id = s.id;
      run.min_dis = min_distance(b.path, b.objects);
      run.comfort = comfort(b.path);
      run.firings = r.firings;
      run.fallbacks = r.fallbacks;
    } catch (...) {
      annotate("scenario " + s.id + " (base weights)");
    }
  });

  km.records.resize(suite.size() * mutants.size());
  parallel_for(km.records.size(), jobs, [&](std::size_t cell) {
    const std::size_t si = cell / mutants.size();
    const Mutant& m = mutants[cell % mutants.size()];
    const Scenario& s = suite[si];
    const BaseData& b = bases[si];
    try {
      const Path mutated = plan(s, m.weights, config);
      KillRecord& rec = km.records[cell];
      rec.scenario_id = s.id;
      rec.weight = m.weight;
      rec.op_index = m.op.index;
      rec.factor = m.op.factor;
      rec.verdicts[oracle_slot(OracleKind::Path)] = killed_path(b.path, mutated, thresholds.path);
      rec.verdicts[oracle_slot(OracleKind::Safety)] = killed_safety(b.path, mutated, b.objects, thresholds.safety);
      rec.verdicts[oracle_slot(OracleKind::Comfort)] = killed_comfort(b.path, mutated, thresholds.comfort);
      rec.base_min_dis = km.base_runs[si].min_dis;
      rec.mutant_min_dis = min_distance(mutated, b.objects);
      rec.base_comfort = km.base_runs[si].comfort;
      rec.mutant_comfort = comfort(mutated);
    } catch (...) {
      annotate("scenario " + s.id + ", w" + std::to_string(m.weight) + ", K=" + format_factor(m.op.factor));
    }
  });

  if (thresholds.path == 0.0 && thresholds.safety == 0.0 && thresholds.comfort == 0.0) {
    for (const KillRecord& r : km.records) {
      if ((r.killed(OracleKind::Safety) || r.killed(OracleKind::Comfort)) && !r.killed(OracleKind::Path)) {
        throw Error("oracle subsumption violated at scenario " + r.scenario_id + ", w" + std::to_string(r.weight) +
                    ", K=" + format_factor(r.factor));
      }
    }
  }
  return km;
}

bool covered(const KillMatrix& matrix, std::size_t weight, OracleKind kind) {
  return std::any_of(matrix.records.begin(), matrix.records.end(),
                     [&](const KillRecord& r) { return r.weight == weight && r.killed(kind); });
}

namespace {

void finish_counts(CoverageTable& t) {
  t.row_counts.assign(t.cells.size(), 0);
  t.column_counts.fill(0);
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    for (std::size_t i = 0; i < kWeightCount; ++i) {
      if (!t.cells[r][i]) continue;
      ++t.row_counts[r];
      ++t.column_counts[i];
    }
  }
}

}  // namespace

CoverageTable per_scenario_table(const KillMatrix& matrix, OracleKind kind) {
  CoverageTable t;
  t.corner = "s";
  t.row_labels = matrix.scenario_ids;
  t.cells.assign(matrix.scenario_ids.size(), {});
  for (const KillRecord& r : matrix.records) {
    if (!r.killed(kind)) continue;
    const auto it = std::find(matrix.scenario_ids.begin(), matrix.scenario_ids.end(), r.scenario_id);
    if (it == matrix.scenario_ids.end()) throw Error("record for unknown scenario '" + r.scenario_id + "'");
    t.cells[static_cast<std::size_t>(it - matrix.scenario_ids.begin())][r.weight - 1] = true;
  }
  finish_counts(t);
  return t;
}

CoverageTable per_operator_table(const KillMatrix& matrix, OracleKind kind) {
  CoverageTable t;
  t.corner = "K";
  for (const auto& op : matrix.operators) t.row_labels.push_back(format_factor(op.factor));
  t.cells.assign(matrix.operators.size(), {});
  for (const KillRecord& r : matrix.records) {
    if (!r.killed(kind)) continue;
    if (r.op_index < 1 || r.op_index > matrix.operators.size()) {
      throw Error("record with unknown operator index " + std::to_string(r.op_index));
    }
    t.cells[r.op_index - 1][r.weight - 1] = true;
  }
  finish_counts(t);
  return t;
}

CoverageReport build_report(const KillMatrix& matrix) {
  CoverageReport rep;
  for (OracleKind k : kAllOracles) {
    for (std::size_t i = 1; i <= kWeightCount; ++i) rep.overall[i - 1][oracle_slot(k)] = covered(matrix, i, k);
    rep.by_scenario[oracle_slot(k)] = per_scenario_table(matrix, k);
    rep.by_operator[oracle_slot(k)] = per_operator_table(matrix, k);
  }
  rep.have_guard_data = !matrix.base_runs.empty();
  for (std::size_t i = 0; i < kWeightCount; ++i) {
    rep.guard_never_fired[i] =
        rep.have_guard_data && std::all_of(matrix.base_runs.begin(), matrix.base_runs.end(),
                                           [&](const BaseRun& b) { return b.firings[i] == 0; });
  }
  return rep;
}

}  // namespace wcov
