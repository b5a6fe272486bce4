#include <wcov/coverage.hpp>
#include <wcov/planner_io.hpp>

#include <benchmark/benchmark.h>

#include <filesystem>

namespace {

const std::filesystem::path kScenarios = WCOV_SCENARIO_DIR;

void BM_EvaluateSuite(benchmark::State& state) {
  const auto suite = wcov::load_suite_scenarios(wcov::load_suite(kScenarios / "suite.json"));
  const wcov::Weights w = wcov::load_weights(kScenarios / "weights.json");
  const auto ops = wcov::canonical_operators();
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(wcov::evaluate_suite(suite, w, ops, wcov::PlannerConfig{}, {}, jobs));
}
BENCHMARK(BM_EvaluateSuite)->Arg(1)->Arg(4)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
