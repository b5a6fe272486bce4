#include <wcov/planner.hpp>
#include <wcov/planner_io.hpp>
#include <wcov/scenario_io.hpp>

#include <benchmark/benchmark.h>

#include <filesystem>

namespace {

const std::filesystem::path kScenarios = WCOV_SCENARIO_DIR;

void BM_Decide(benchmark::State& state) {
  const wcov::PlannerConfig config;
  const wcov::Scenario s = wcov::load_scenario(kScenarios / "s5.json");
  const wcov::Weights w = wcov::load_weights(kScenarios / "weights.json");
  const auto tracks = wcov::object_tracks(s, config);
  const wcov::Lane& reference = wcov::select_reference_lane(s.map, s.ego.goal);
  const wcov::Environment env{&reference, s.ego.goal, tracks, 0, s.map.lanes};
  const wcov::VehicleState ego{0.0, s.ego.position, s.ego.heading, s.ego.speed, s.ego.acceleration};
  for (auto _ : state) benchmark::DoNotOptimize(wcov::decide(ego, env, w, config));
}
BENCHMARK(BM_Decide);

void BM_Plan(benchmark::State& state) {
  const wcov::PlannerConfig config;
  const std::string name = "s" + std::to_string(state.range(0)) + ".json";
  const wcov::Scenario s = wcov::load_scenario(kScenarios / name);
  const wcov::Weights w = wcov::load_weights(kScenarios / "weights.json");
  for (auto _ : state) benchmark::DoNotOptimize(wcov::plan(s, w, config));
  state.SetLabel(name);
}
BENCHMARK(BM_Plan)->DenseRange(1, 10)->Unit(benchmark::kMillisecond);

}  // namespace
