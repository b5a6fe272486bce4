#include <wcov/errors.hpp>
#include <wcov/planner.hpp>
#include <wcov/propagation.hpp>

#include "decision_fixtures.hpp"
#include "reference_oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace wcov {
namespace {

const Weights kWeights{{1.0, 5.0, 10.0, 6.0, 6.0, 5.0}};

Lane straight_lane(double limit = 25.0) { return {"L", {{-50, 0}, {1000, 0}}, 4.5, limit}; }

Scenario empty_road(double speed, double timeout) {
  Scenario s;
  s.id = "empty";
  s.map.lanes.push_back(straight_lane());
  s.ego = {{0, 0}, speed, 0.0, 0.0, {900, 0}};
  s.timeout = timeout;
  return s;
}

ShortTermPath from_points(std::vector<TrajectoryPoint> pts) {
  ShortTermPath stp;
  stp.samples = std::move(pts);
  return stp;
}

TEST(Enumerate, GridCardinalityAndOrder) {
  const PlannerConfig cfg;
  const VehicleState st{0, {0, 0}, 0, 10, 0};
  const auto c = enumerate_candidates(st, straight_lane(), cfg);
  ASSERT_EQ(c.size(), 25u);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(c[i].index, i);
    EXPECT_DOUBLE_EQ(c[i].lateral_offset, cfg.lateral_offsets[i / 5]);
    EXPECT_DOUBLE_EQ(c[i].target_speed, 10.0 + cfg.speed_deltas[i % 5]);
  }
}

TEST(Enumerate, TargetSpeedClampsAtZero) {
  const PlannerConfig cfg;
  const VehicleState st{0, {0, 0}, 0, 0, 0};
  const auto c = enumerate_candidates(st, straight_lane(), cfg);
  EXPECT_DOUBLE_EQ(c[1].target_speed, 0.0);
  EXPECT_DOUBLE_EQ(c[0].target_speed, 0.0);
  EXPECT_EQ(c[0].samples.back().location, (Vec2{0, 0}));
}

TEST(Enumerate, FirstSampleEqualsState) {
  const PlannerConfig cfg;
  const VehicleState st{3.0, {1, 0.5}, 0.1, 7, 0.4};
  for (const auto& c : enumerate_candidates(st, straight_lane(), cfg)) {
    ASSERT_EQ(c.samples.size(), cfg.steps_per_decision() + 1);
    const TrajectoryPoint& p = c.samples.front();
    EXPECT_EQ(p.t, st.t);
    EXPECT_EQ(p.location, st.position);
    EXPECT_EQ(p.direction, st.heading);
    EXPECT_EQ(p.speed, st.speed);
    EXPECT_EQ(p.acceleration, st.acceleration);
  }
}

TEST(Enumerate, SamplesAreChordExact) {
  const PlannerConfig cfg;
  const VehicleState st{0, {0, 1}, 0.2, 9, 0};
  for (const auto& c : enumerate_candidates(st, straight_lane(), cfg)) {
    for (std::size_t k = 1; k < c.samples.size(); ++k) {
      const double chord = distance(c.samples[k].location, c.samples[k - 1].location);
      EXPECT_NEAR(chord, c.samples[k].speed * cfg.dt_sim, 1e-12);
    }
  }
}

TEST(Enumerate, OffsetCandidatesSettleOnOffset) {
  const PlannerConfig cfg;
  const VehicleState st{0, {0, 0}, 0, 10, 0};
  const auto c = enumerate_candidates(st, straight_lane(), cfg);
  for (const auto& cand : c) {
    ASSERT_FALSE(cand.lookahead.empty());
    EXPECT_NEAR(cand.lookahead.back().location.y, cand.lateral_offset, 1e-9);
  }
}

TEST(Features, StraightConstantSpeedIsAllZero) {
  std::vector<TrajectoryPoint> pts;
  for (int k = 0; k <= 10; ++k) pts.push_back({0.1 * k, {1.0 * k, 0}, 0.0, 10.0, 0.0});
  const Environment env{nullptr, {100, 0}, {}, 0, {}};
  const Features f = compute_features(from_points(pts), env, PlannerConfig{});
  EXPECT_EQ(f.max_lat_acc, 0.0);
  EXPECT_EQ(f.max_acc, 0.0);
  EXPECT_EQ(f.max_decel, 0.0);
  EXPECT_EQ(f.max_curv, 0.0);
  EXPECT_DOUBLE_EQ(f.goal_dist, 90.0);
  EXPECT_FALSE(f.collides);
}

TEST(Features, ConstantRadiusArcMatchesClosedForm) {
  const double r = 20.0;
  const double v = 10.0;
  const double dt = 0.1;
  std::vector<TrajectoryPoint> pts;
  for (int k = 0; k <= 10; ++k) {
    const double phi = v * dt * k / r;
    pts.push_back({dt * k, {r * std::sin(phi), r - r * std::cos(phi)}, phi, v, 0.0});
  }
  const Environment env{nullptr, {0, 0}, {}, 0, {}};
  const Features f = compute_features(from_points(pts), env, PlannerConfig{});
  EXPECT_NEAR(f.max_lat_acc, v * v / r, 0.05 * v * v / r);
  EXPECT_NEAR(f.max_curv, 1.0 / r, 0.05 / r);
}

TEST(Features, DecelerationSignSplit) {
  std::vector<TrajectoryPoint> pts;
  double x = 0;
  for (int k = 0; k <= 10; ++k) {
    const double v = 10.0 - 3.0 * 0.1 * k;
    if (k > 0) x += v * 0.1;
    pts.push_back({0.1 * k, {x, 0}, 0.0, v, -3.0});
  }
  const Environment env{nullptr, {0, 0}, {}, 0, {}};
  const Features f = compute_features(from_points(pts), env, PlannerConfig{});
  EXPECT_DOUBLE_EQ(f.max_decel, 3.0);
  EXPECT_EQ(f.max_acc, 0.0);
  EXPECT_DOUBLE_EQ(f.max_speed, 10.0);
}

TEST(Features, FewerThanTwoSamplesIsDegenerate) {
  const Environment env{nullptr, {0, 0}, {}, 0, {}};
  EXPECT_THROW(compute_features(from_points({{0, {0, 0}, 0, 0, 0}}), env, PlannerConfig{}), DegeneratePath);
}

TEST(Features, DiscOverlapAtMatchingTimestamp) {
  std::vector<TrajectoryPoint> pts;
  for (int k = 0; k <= 10; ++k) pts.push_back({0.1 * k, {1.0 * k, 0}, 0.0, 10.0, 0.0});
  Path obstacle;
  for (int k = 0; k <= 10; ++k) obstacle.points.push_back({0.1 * k, {30.0 - 2.0 * k, 0.0}, 0, 0, 0});
  std::vector<ObjectTrack> tracks{{"o", obstacle, 1.0}};
  const PlannerConfig cfg;
  Environment env{nullptr, {100, 0}, tracks, 0, {}};
  // At k = 10 the ego is at 10 and the object at 10: overlap.
  EXPECT_TRUE(compute_features(from_points(pts), env, cfg).collides);
  tracks[0].path.points.back().location = {10.0, cfg.ego_radius() + 1.0 + 1e-6};
  for (int k = 0; k < 10; ++k) tracks[0].path.points[k].location = {100.0, 100.0};
  EXPECT_FALSE(compute_features(from_points(pts), env, cfg).collides);
}

TEST(Features, LeavingDrivableAreaIsInfeasible) {
  std::vector<TrajectoryPoint> pts;
  for (int k = 0; k <= 10; ++k) pts.push_back({0.1 * k, {1.0 * k, 0.3 * k}, 0.0, 10.0, 0.0});
  const std::vector<Lane> lanes{straight_lane()};
  const Environment env{nullptr, {100, 0}, {}, 0, lanes};
  const Features f = compute_features(from_points(pts), env, PlannerConfig{});
  EXPECT_TRUE(f.off_road);
  EXPECT_FALSE(f.feasible());
}

TEST(Cost, OnlyProgressWhenFeaturesZero) {
  Features f;
  f.goal_dist = 42.0;
  const CostBreakdown c = cost(f, kWeights, PlannerConfig{});
  EXPECT_DOUBLE_EQ(c.total, 42.0);
  for (double t : c.terms) EXPECT_EQ(t, 0.0);
}

TEST(Cost, ThresholdsAreStrict) {
  const PlannerConfig cfg;
  Features f;
  f.max_lat_acc = cfg.tau_lat;
  f.max_acc = cfg.tau_acc;
  f.max_decel = cfg.tau_dec;
  f.max_curv = cfg.tau_curv;
  f.max_speed = 10.0;
  f.speed_limit = 10.0;
  const CostBreakdown c = cost(f, kWeights, cfg);
  for (std::size_t i = 1; i < kWeightCount; ++i) EXPECT_EQ(c.terms[i], 0.0) << i;
  f.max_lat_acc = std::nextafter(cfg.tau_lat, 10.0);
  EXPECT_EQ(cost(f, kWeights, cfg).terms[1], kWeights[1]);
}

TEST(Cost, LinearTermArithmetic) {
  Features f;
  f.max_lat_acc = 1.5;
  Weights w{{2, 7, 7, 7, 7, 7}};
  EXPECT_DOUBLE_EQ(cost(f, w, PlannerConfig{}).total, 3.0);
}

TEST(Cost, TotalIsSumOfTerms) {
  const PlannerConfig cfg;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    Features f{u(rng), u(rng), u(rng), u(rng), u(rng) * 0.05, u(rng) * 30, false, false, u(rng) * 4};
    const CostBreakdown c = cost(f, kWeights, cfg);
    double sum = c.progress;
    for (double t : c.terms) sum += t;
    EXPECT_NEAR(c.total, sum, 1e-9);
    EXPECT_EQ(c.total, testing::reference_total(f, kWeights, cfg));
  }
}

TEST(Decide, KeepSpeedOnEmptyRoadAtCruise) {
  PlannerConfig cfg;
  const Lane lane = straight_lane();
  const std::vector<Lane> lanes{lane};
  const VehicleState st{0, {0, 0}, 0, cfg.v_max, 0};
  const Environment env{&lanes[0], {900, 0}, {}, 0, lanes};
  const Decision d = decide(st, env, kWeights, cfg);

  const auto cands = enumerate_candidates(st, lane, cfg);
  std::vector<Features> feats;
  for (const auto& c : cands) feats.push_back(compute_features(c, env, cfg));
  EXPECT_EQ(d.chosen.index, testing::brute_force_argmin(feats, kWeights, cfg));
  EXPECT_EQ(d.chosen.index, 12u);  // offset 0, delta 0; deltas +1/+2 clamp to the same path
  EXPECT_FALSE(d.fallback);
  for (std::size_t k = 0; k < kWeightCount; ++k) EXPECT_EQ(d.firings[k], 0u) << k;
}

TEST(Decide, TiesGoToLowestIndex) {
  PlannerConfig cfg;
  cfg.lateral_offsets = {0.0, 0.0};
  cfg.speed_deltas = {0.0, 0.0};
  const std::vector<Lane> lanes{straight_lane()};
  const VehicleState st{0, {0, 0}, 0, 10, 0};
  const Environment env{&lanes[0], {900, 0}, {}, 0, lanes};
  EXPECT_EQ(decide(st, env, kWeights, cfg).chosen.index, 0u);
}

TEST(Decide, AllCollidingFallsBackToStraightBrake) {
  PlannerConfig cfg;
  const std::vector<Lane> lanes{straight_lane()};
  Path blob;
  for (int k = 0; k <= 100; ++k) blob.points.push_back({0.1 * k, {0, 0}, 0, 0, 0});
  const std::vector<ObjectTrack> tracks{{"blob", blob, 50.0}};
  const VehicleState st{0, {0, 0}, 0.1, 10, 0};
  const Environment env{&lanes[0], {900, 0}, tracks, 0, lanes};
  const Decision d = decide(st, env, kWeights, cfg);
  EXPECT_TRUE(d.fallback);
  EXPECT_EQ(d.chosen.index, kFallbackIndex);
  EXPECT_DOUBLE_EQ(d.chosen.target_speed, 8.0);
  for (const auto& p : d.chosen.samples) EXPECT_NEAR(p.direction, 0.1, 1e-12);
}

TEST(Decide, MatchesBruteForceOnRandomStates) {
  const PlannerConfig cfg;
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto fx = testing::random_decision(rng, cfg);
    const Environment env = fx.environment();
    const auto cands = enumerate_candidates(fx.state, fx.map.lanes.front(), cfg);
    std::vector<Features> feats;
    for (const auto& c : cands) feats.push_back(compute_features(c, env, cfg));
    const Decision d = decide(fx.state, env, fx.weights, cfg);
    ASSERT_EQ(d.chosen.index, testing::brute_force_argmin(feats, fx.weights, cfg)) << "trial " << trial;
  }
}

TEST(Plan, SingleDecisionRun) {
  const PlannerConfig cfg;
  const Scenario s = empty_road(10, cfg.dt_dec);
  const PlanResult r = plan_traced(s, kWeights, cfg);
  ASSERT_EQ(r.path.size(), cfg.steps_per_decision() + 1);
  ASSERT_EQ(r.choices.size(), 1u);
  const std::vector<Lane> lanes = s.map.lanes;
  const Environment env{&lanes[0], s.ego.goal, {}, 0, lanes};
  const Decision d = decide({0, s.ego.position, s.ego.heading, s.ego.speed, s.ego.acceleration}, env, kWeights, cfg);
  EXPECT_TRUE(r.path.points == d.chosen.samples);
}

TEST(Plan, InvalidTimeout) {
  const Scenario s = empty_road(10, 2.5);
  EXPECT_THROW(plan(s, kWeights, PlannerConfig{}), InvalidTimeout);
}

TEST(Plan, StraightEmptyLaneKeepsZeroOffset) {
  const PlannerConfig cfg;
  const Scenario s = empty_road(8, 10.0);
  const PlanResult r = plan_traced(s, kWeights, cfg);
  ASSERT_EQ(r.choices.size(), 10u);
  const std::vector<Lane> lanes = s.map.lanes;
  for (std::size_t m = 0; m < r.choices.size(); ++m) {
    EXPECT_DOUBLE_EQ(cfg.lateral_offsets[r.choices[m] / cfg.speed_deltas.size()], 0.0) << "decision " << m;
    const TrajectoryPoint& head = r.path.points[m * cfg.steps_per_decision()];
    const VehicleState st{head.t, head.location, head.direction, head.speed, head.acceleration};
    const Environment env{&lanes[0], s.ego.goal, {}, m * cfg.steps_per_decision(), lanes};
    std::vector<Features> feats;
    for (const auto& c : enumerate_candidates(st, lanes[0], cfg)) feats.push_back(compute_features(c, env, cfg));
    EXPECT_EQ(r.choices[m], testing::brute_force_argmin(feats, kWeights, cfg)) << "decision " << m;
  }
  for (const auto& p : r.path.points) EXPECT_EQ(p.location.y, 0.0);
}

TEST(Plan, ReachesTimeoutOnUniformGrid) {
  const PlannerConfig cfg;
  const Scenario s = empty_road(5, 4.0);
  const Path p = plan(s, kWeights, cfg);
  EXPECT_EQ(p.size(), 41u);
  EXPECT_NEAR(p.back().t, 4.0, 1e-12);
  EXPECT_EQ(check_path_consistency(p, cfg.dt_sim), "");
}

TEST(Config, ValidationRejectsBadSteps) {
  PlannerConfig cfg;
  cfg.dt_dec = 0.25;
  cfg.dt_sim = 0.1;
  EXPECT_THROW(cfg.validate(), ValidationError);
  PlannerConfig empty;
  empty.lateral_offsets.clear();
  EXPECT_THROW(empty.validate(), ValidationError);
}

TEST(ReferenceLane, NearestToGoal) {
  Map m;
  m.lanes.push_back({"a", {{0, 0}, {100, 0}}, 3.5, 10});
  m.lanes.push_back({"b", {{0, 10}, {100, 10}}, 3.5, 10});
  EXPECT_EQ(select_reference_lane(m, {50, 8}).id, "b");
  EXPECT_EQ(select_reference_lane(m, {50, 5}).id, "a");  // tie goes to map order
}

}  // namespace
}  // namespace wcov
