#pragma once

#include <wcov/path.hpp>
#include <wcov/scenario.hpp>

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace wcov {

inline constexpr std::size_t kWeightCount = 6;

/// The six mutable cost weights. `values[0]` is w1 (per m/s^2 of peak lateral
/// acceleration); `values[1..5]` are the flat penalties w2..w6 for peak
/// lateral acceleration, speed limit, acceleration, deceleration and
/// curvature thresholds respectively.
struct Weights {
  std::array<double, kWeightCount> values{};

  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }

  friend bool operator==(const Weights&, const Weights&) = default;
};

/// Throws ValidationError unless every weight is finite and >= 0.
void validate(const Weights& w);

struct PlannerConfig {
  double dt_dec = 1.0;  ///< decision step, s
  double dt_sim = 0.1;  ///< sample step, s
  std::vector<double> lateral_offsets{-3.0, -1.5, 0.0, 1.5, 3.0};  ///< m, relative to the reference lane
  std::vector<double> speed_deltas{-2.0, -1.0, 0.0, 1.0, 2.0};     ///< m/s per decision
  double tau_lat = 2.0;    ///< m/s^2
  double tau_acc = 1.5;    ///< m/s^2
  double tau_dec = 1.5;    ///< m/s^2
  double tau_curv = 0.1;   ///< 1/m
  double c_prog = 1.0;     ///< cost per metre of remaining goal distance
  double safety_margin = 0.2;  ///< m, added to the ego disc radius
  double v_max = 20.0;         ///< m/s, target speeds clamp to [0, v_max]
  double ego_length = 4.0;     ///< m
  double ego_width = 1.8;      ///< m
  double preview_time = 5.0;   ///< s, collision look-ahead
  double maneuver_time = 3.0;  ///< s, time to reach the lateral offset
  double min_preview = 8.0;    ///< m, shortest lateral manoeuvre distance

  /// Samples per decision (dt_dec / dt_sim).
  std::size_t steps_per_decision() const;
  /// Samples in the whole preview (preview_time / dt_sim).
  std::size_t preview_steps() const;
  /// Samples in the lateral manoeuvre (maneuver_time / dt_sim).
  std::size_t maneuver_steps() const;
  double ego_radius() const { return 0.5 * ego_length + safety_margin; }

  /// Throws ValidationError on any broken invariant.
  void validate() const;
};

/// Kinematic state at the head of the current path.
struct VehicleState {
  double t = 0.0;
  Vec2 position;
  double heading = 0.0;
  double speed = 0.0;
  double acceleration = 0.0;
};

/// One candidate decision. `samples` cover [t, t + dt_dec] and form the
/// short-term path; `lookahead` continues the same plan to the end of the
/// preview and only feeds the collision check.
struct ShortTermPath {
  std::vector<TrajectoryPoint> samples;
  std::vector<TrajectoryPoint> lookahead;
  std::size_t index = 0;  ///< position in the enumeration grid
  double lateral_offset = 0.0;
  double target_speed = 0.0;
};

/// A dynamic object as seen by the planner: its offline path (extended past
/// the timeout by the preview) and its collision disc.
struct ObjectTrack {
  std::string id;
  Path path;
  double radius = 0.0;  ///< half the footprint diagonal
};

/// Everything `decide` needs besides the ego state.
struct Environment {
  const Lane* reference = nullptr;
  Vec2 goal;
  std::span<const ObjectTrack> objects;
  std::size_t sample_index = 0;  ///< global sample index of the ego state
  /// Lanes whose union is the drivable area. Empty means unbounded.
  std::span<const Lane> drivable;
};

struct Features {
  double max_lat_acc = 0.0;
  double max_acc = 0.0;
  double max_decel = 0.0;
  double max_speed = 0.0;
  double max_curv = 0.0;
  double goal_dist = 0.0;  ///< see goal_distance
  bool collides = false;
  bool off_road = false;  ///< some sample leaves the drivable area
  double speed_limit = std::numeric_limits<double>::infinity();

  bool feasible() const { return !collides && !off_road; }
};

struct CostBreakdown {
  std::array<double, kWeightCount> terms{};
  double progress = 0.0;
  double total = 0.0;
};

/// Which weighted terms are live for a candidate: index 0 is
/// `max_lat_acc > 0` (w1 is a multiplier), indices 1..5 are the strict
/// threshold predicates guarding w2..w6.
std::array<bool, kWeightCount> guard_predicates(const Features& f, const PlannerConfig& config);

using GuardFirings = std::array<std::size_t, kWeightCount>;

inline constexpr std::size_t kFallbackIndex = std::numeric_limits<std::size_t>::max();

struct Decision {
  ShortTermPath chosen;  ///< `chosen.index == kFallbackIndex` for the emergency brake
  bool fallback = false;  ///< no candidate was feasible
  GuardFirings firings{};
};

/// Lane whose centerline lies closest to `goal` (first one on ties).
const Lane& select_reference_lane(const Map& map, Vec2 goal);

/// One candidate per (lateral offset, speed delta), offsets outer and deltas
/// inner, both in configuration order.
std::vector<ShortTermPath> enumerate_candidates(const VehicleState& state, const Lane& reference,
                                                const PlannerConfig& config);

/// Straight candidate along the current heading using the most negative speed
/// delta. Returned by `decide` when no grid candidate is feasible.
ShortTermPath emergency_brake(const VehicleState& state, const PlannerConfig& config);

/// Route distance from a point to the goal in the reference lane's
/// frame: |s_goal - s| + |l_goal - l|. Euclidean distance without a lane.
double goal_distance(Vec2 from, Vec2 goal, const Lane* reference);

/// Features of one candidate. goal_dist is measured from the end of the
/// preview (last lookahead sample). The speed limit comes from the reference
/// lane. Collisions with `env.objects` and leaving `env.drivable` are checked
/// over samples and lookahead.
Features compute_features(const ShortTermPath& stp, const Environment& env, const PlannerConfig& config);

CostBreakdown cost(const Features& f, const Weights& w, const PlannerConfig& config);

/// Feasible candidates that no other feasible candidate strictly beats on
/// goal distance while matching or beating it on every weighted feature.
/// A candidate outside this set is costlier than another one for every
/// nonnegative weight vector, so it can never be selected.
std::vector<bool> contending(std::span<const Features> features, const PlannerConfig& config);

Decision decide(const VehicleState& state, const Environment& env, const Weights& w,
                const PlannerConfig& config);

struct PlanResult {
  Path path;
  GuardFirings firings{};           ///< summed over every decision
  std::vector<std::size_t> choices; ///< chosen grid index per decision
  std::size_t fallbacks = 0;
};

/// Object tracks propagated to `timeout + preview_time`.
std::vector<ObjectTrack> object_tracks(const Scenario& s, const PlannerConfig& config);

/// Object paths truncated to the scenario timeout (what the metrics see).
std::vector<Path> object_paths(const Scenario& s, const PlannerConfig& config);

/// Runs the planner from t = 0 to the scenario timeout. Throws
/// InvalidTimeout when the timeout is not a multiple of dt_dec.
PlanResult plan_traced(const Scenario& s, const Weights& w, const PlannerConfig& config);

inline Path plan(const Scenario& s, const Weights& w, const PlannerConfig& config) {
  return plan_traced(s, w, config).path;
}

}  // namespace wcov
