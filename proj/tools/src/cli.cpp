#include <wcov_cli/cli.hpp>

#include <wcov/coverage.hpp>
#include <wcov/errors.hpp>
#include <wcov/mutation.hpp>
#include <wcov/path.hpp>
#include <wcov/planner.hpp>
#include <wcov/planner_io.hpp>
#include <wcov/report.hpp>
#include <wcov/scenario_io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>

namespace wcov::cli {

namespace {

namespace fs = std::filesystem;

struct MutateSpec {
  std::size_t weight = 0;
  double factor = 1.0;
};

std::optional<MutateSpec> parse_mutate(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  MutateSpec m;
  const char* b = text.data();
  const char* e = b + text.size();
  auto r1 = std::from_chars(b, b + colon, m.weight);
  if (r1.ec != std::errc() || r1.ptr != b + colon) return std::nullopt;
  auto r2 = std::from_chars(b + colon + 1, e, m.factor);
  if (r2.ec != std::errc() || r2.ptr != e) return std::nullopt;
  if (m.weight < 1 || m.weight > kWeightCount || !(m.factor >= 0.0) || !std::isfinite(m.factor)) return std::nullopt;
  return m;
}

std::vector<MutationOperator> operators_from(const std::vector<double>& factors) {
  return factors.empty() ? canonical_operators() : make_operators(factors);
}

PlannerConfig config_from(const std::string& file) {
  return file.empty() ? PlannerConfig{} : load_planner_config(file);
}

void write_text(const fs::path& file, const std::string& content) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + file.string());
  out << content;
  if (!out) throw IoError("error writing " + file.string());
}

struct PlanArgs {
  std::string scenario, weights, config, mutate, out;
};

int do_plan(const PlanArgs& a, std::ostream& err) {
  std::optional<MutateSpec> mutate;
  if (!a.mutate.empty()) {
    mutate = parse_mutate(a.mutate);
    if (!mutate) {
      err << "error: --mutate expects i:K with i in 1..6 and K >= 0, got '" << a.mutate << "'\n";
      return kExitUsage;
    }
  }
  const Scenario s = load_scenario(a.scenario);
  Weights w = load_weights(a.weights);
  const PlannerConfig config = config_from(a.config);
  if (mutate) w = apply(w, mutate->weight, mutate->factor);
  const Path p = plan(s, w, config);
  write_text(a.out, path_to_csv(p));
  return kExitOk;
}

struct MutantsArgs {
  std::string weights, out;
  std::vector<double> operators;
};

int do_mutants(const MutantsArgs& a) {
  const Weights base = load_weights(a.weights);
  const auto ops = operators_from(a.operators);
  fs::create_directories(a.out);
  for (const Mutant& m : generate_mutants(base, ops)) {
    write_text(fs::path(a.out) / mutant_file_name(m), serialize_weights(m.weights));
  }
  return kExitOk;
}

struct AnalyzeArgs {
  std::string suite, weights, config, out;
  double theta_p = 0.0, theta_s = 0.0, theta_c = 0.0;
  unsigned jobs = 0;
  std::vector<double> operators;
};

int do_analyze(const AnalyzeArgs& a) {
  const TestSuite suite = load_suite(a.suite);
  const std::vector<Scenario> scenarios = load_suite_scenarios(suite);
  const Weights base = load_weights(a.weights);
  const PlannerConfig config = config_from(a.config);
  const OracleThresholds thresholds{a.theta_p, a.theta_s, a.theta_c};
  thresholds.validate();
  const auto ops = operators_from(a.operators);
  const unsigned jobs = a.jobs > 0 ? a.jobs : std::max(1u, std::thread::hardware_concurrency());

  const KillMatrix matrix = evaluate_suite(scenarios, base, ops, config, thresholds, jobs);
  write_kill_matrix(matrix, a.out);
  emit_report(build_report(matrix), a.out, ReportFormat::All);
  return kExitOk;
}

struct ReportArgs {
  std::string analysis, format, out;
};

int do_report(const ReportArgs& a) {
  const KillMatrix matrix = read_kill_matrix(a.analysis);
  const ReportFormat format = a.format == "text" ? ReportFormat::Text : ReportFormat::Csv;
  emit_report(build_report(matrix), a.out.empty() ? fs::path(a.analysis) : fs::path(a.out), format);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight-coverage mutation analysis for a sampling path planner", "wcov"};
  app.require_subcommand(1, 1);

  PlanArgs plan_args;
  auto* plan_cmd = app.add_subcommand("plan", "Plan one scenario and write the ego path as CSV");
  plan_cmd->add_option("--scenario", plan_args.scenario, "Scenario JSON")->required();
  plan_cmd->add_option("--weights", plan_args.weights, "Weights JSON")->required();
  plan_cmd->add_option("--config", plan_args.config, "Planner config JSON");
  plan_cmd->add_option("--mutate", plan_args.mutate, "Plan with weight i scaled by K (i:K)");
  plan_cmd->add_option("--out", plan_args.out, "Output path CSV")->required();

  MutantsArgs mutants_args;
  auto* mutants_cmd = app.add_subcommand("mutants", "Write one weights file per mutant");
  mutants_cmd->add_option("--weights", mutants_args.weights, "Base weights JSON")->required();
  mutants_cmd->add_option("--out", mutants_args.out, "Output directory")->required();
  mutants_cmd->add_option("--operators", mutants_args.operators, "Mutation factors K (default canonical)");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run every mutant over a suite and report coverage");
  analyze_cmd->add_option("--suite", analyze_args.suite, "Suite JSON")->required();
  analyze_cmd->add_option("--weights", analyze_args.weights, "Base weights JSON")->required();
  analyze_cmd->add_option("--config", analyze_args.config, "Planner config JSON");
  analyze_cmd->add_option("--theta-p", analyze_args.theta_p, "Path oracle threshold (m)");
  analyze_cmd->add_option("--theta-s", analyze_args.theta_s, "Safety oracle threshold (m)");
  analyze_cmd->add_option("--theta-c", analyze_args.theta_c, "Comfort oracle threshold (m/s^2)");
  analyze_cmd->add_option("--jobs", analyze_args.jobs, "Worker threads (default: all cores)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--operators", analyze_args.operators, "Mutation factors K (default canonical)");
  analyze_cmd->add_option("--out", analyze_args.out, "Output directory")->required();

  ReportArgs report_args;
  auto* report_cmd = app.add_subcommand("report", "Render reports from a saved analysis");
  report_cmd->add_option("--analysis", report_args.analysis, "Directory written by analyze")->required();
  report_cmd->add_option("--format", report_args.format, "csv or text")
      ->required()
      ->check(CLI::IsMember({"csv", "text"}));
  report_cmd->add_option("--out", report_args.out, "Output directory (default: the analysis directory)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (*plan_cmd) return do_plan(plan_args, err);
    if (*mutants_cmd) return do_mutants(mutants_args);
    if (*analyze_cmd) return do_analyze(analyze_args);
    if (*report_cmd) return do_report(report_args);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitInput;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "simulation error: " << e.what() << '\n';
    return kExitSimulation;
  }
  return kExitUsage;
}

}  // namespace wcov::cli
