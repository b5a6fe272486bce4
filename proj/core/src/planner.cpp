#include <wcov/errors.hpp>
#include <wcov/planner.hpp>
#include <wcov/propagation.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace wcov {

void validate(const Weights& w) {
  for (std::size_t i = 0; i < kWeightCount; ++i) {
    if (!std::isfinite(w[i]) || w[i] < 0.0) {
      throw ValidationError("/w" + std::to_string(i + 1), "weight must be finite and >= 0");
    }
  }
}

namespace {

std::size_t integer_ratio(double num, double den, const char* field) {
  const double r = std::round(num / den);
  if (r < 1.0 || std::fabs(r * den - num) > 1e-9) {
    throw ValidationError(field, "must be a positive integer multiple of dt_sim");
  }
  return static_cast<std::size_t>(r);
}

void positive(double v, const char* field) {
  if (!std::isfinite(v) || !(v > 0.0)) throw ValidationError(field, "must be > 0");
}

}  // namespace

std::size_t PlannerConfig::steps_per_decision() const { return integer_ratio(dt_dec, dt_sim, "/dt_dec"); }
std::size_t PlannerConfig::preview_steps() const { return integer_ratio(preview_time, dt_sim, "/preview_time"); }
std::size_t PlannerConfig::maneuver_steps() const { return integer_ratio(maneuver_time, dt_sim, "/maneuver_time"); }

void PlannerConfig::validate() const {
  positive(dt_sim, "/dt_sim");
  positive(dt_dec, "/dt_dec");
  steps_per_decision();
  positive(preview_time, "/preview_time");
  preview_steps();
  positive(maneuver_time, "/maneuver_time");
  maneuver_steps();
  if (preview_time + 1e-9 < dt_dec) throw ValidationError("/preview_time", "must be >= dt_dec");
  if (lateral_offsets.empty()) throw ValidationError("/lateral_offsets", "must not be empty");
  if (speed_deltas.empty()) throw ValidationError("/speed_deltas", "must not be empty");
  for (double v : lateral_offsets) {
    if (!std::isfinite(v)) throw ValidationError("/lateral_offsets", "must be finite");
  }
  for (double v : speed_deltas) {
    if (!std::isfinite(v)) throw ValidationError("/speed_deltas", "must be finite");
  }
  positive(tau_lat, "/tau_lat");
  positive(tau_acc, "/tau_acc");
  positive(tau_dec, "/tau_dec");
  positive(tau_curv, "/tau_curv");
  positive(c_prog, "/c_prog");
  if (!std::isfinite(safety_margin) || safety_margin < 0.0) throw ValidationError("/safety_margin", "must be >= 0");
  positive(v_max, "/v_max");
  positive(ego_length, "/ego_length");
  positive(ego_width, "/ego_width");
  positive(min_preview, "/min_preview");
}

const Lane& select_reference_lane(const Map& map, Vec2 goal) {
  if (map.lanes.empty()) throw ValidationError("/map/lanes", "map needs at least one lane");
  const Lane* best = &map.lanes.front();
  double best_d = project_onto_polyline(best->centerline, goal).distance;
  for (const Lane& lane : map.lanes) {
    const double d = project_onto_polyline(lane.centerline, goal).distance;
    if (d < best_d) {
      best = &lane;
      best_d = d;
    }
  }
  return *best;
}

namespace {

constexpr double kMaxRelativeHeading = 1.2;  // rad; steeper start slopes are clamped

// Lateral profile y(x) in a local frame: cubic Hermite from (x0, y0) with
// slope m0 to (x0 + len, y1) with slope 0, then constant.
struct LateralProfile {
  double x0 = 0.0;
  double len = 1.0;
  double y0 = 0.0;
  double m0 = 0.0;
  double y1 = 0.0;

  double y(double x) const {
    const double u = (x - x0) / len;
    if (u >= 1.0) return y1;
    if (u <= 0.0) return y0 + m0 * (x - x0);
    const double u2 = u * u;
    const double u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * len * m0 + (-2 * u3 + 3 * u2) * y1;
  }

  double slope(double x) const {
    const double u = (x - x0) / len;
    if (u >= 1.0) return 0.0;
    if (u <= 0.0) return m0;
    const double u2 = u * u;
    return ((6 * u2 - 6 * u) * y0 + (3 * u2 - 4 * u + 1) * len * m0 + (-6 * u2 + 6 * u) * y1) / len;
  }
};

struct Frame {
  Vec2 origin;
  double angle = 0.0;
  Vec2 u;
  Vec2 n;

  static Frame at(Vec2 origin, double angle) {
    const Vec2 u = unit(angle);
    return {origin, angle, u, {-u.y, u.x}};
  }
  Vec2 to_world(double x, double y) const { return origin + x * u + y * n; }
};

// Linear ramp from v0 to vt over `steps` samples. Past the ramp a braking
// profile keeps its deceleration until standstill; any other profile holds vt.
struct SpeedProfile {
  double v0 = 0.0;
  double vt = 0.0;
  std::size_t steps = 1;  // samples until vt is reached

  double at(std::size_t k) const {
    if (k <= steps) return v0 + (vt - v0) * (static_cast<double>(k) / static_cast<double>(steps));
    if (vt >= v0) return vt;
    const double per_step = (v0 - vt) / static_cast<double>(steps);
    return std::max(0.0, vt - per_step * static_cast<double>(k - steps));
  }
  double acceleration_at(std::size_t k, double dt) const {
    if (k == 0) return 0.0;
    return (at(k) - at(k - 1)) / dt;
  }
};

// Advances along the profile from x_prev until the chord to the new point is
// exactly `chord` (to the last representable bit of the bracket).
double march(const Frame& f, const LateralProfile& prof, double x_prev, double chord) {
  if (chord <= 0.0) return x_prev;
  const Vec2 from = f.to_world(x_prev, prof.y(x_prev));
  double lo = x_prev;
  double hi = x_prev + chord;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double d = distance(f.to_world(mid, prof.y(mid)), from);
    if (d < chord) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double d_lo = chord - distance(f.to_world(lo, prof.y(lo)), from);
  const double d_hi = distance(f.to_world(hi, prof.y(hi)), from) - chord;
  return d_lo <= d_hi ? lo : hi;
}

ShortTermPath build(const VehicleState& state, const Frame& frame, const LateralProfile& prof, double x_start,
                    const SpeedProfile& speed, const PlannerConfig& config) {
  const std::size_t n = config.steps_per_decision();
  const std::size_t m = std::max(n, config.preview_steps());
  const double dt = config.dt_sim;
  const double accel = (speed.vt - speed.v0) / config.dt_dec;

  ShortTermPath out;
  out.target_speed = speed.vt;
  out.lateral_offset = prof.y1;
  out.samples.reserve(n + 1);
  out.lookahead.reserve(m - n);
  out.samples.push_back({state.t, state.position, state.heading, state.speed, state.acceleration});

  double x = x_start;
  for (std::size_t k = 1; k <= m; ++k) {
    const double v = speed.at(k);
    x = march(frame, prof, x, v * dt);
    TrajectoryPoint pt;
    pt.t = state.t + static_cast<double>(k) * dt;
    pt.location = frame.to_world(x, prof.y(x));
    pt.direction = wrap_angle(frame.angle + std::atan(prof.slope(x)));
    pt.speed = v;
    pt.acceleration = k <= n ? accel : speed.acceleration_at(k, dt);
    if (k <= n) {
      out.samples.push_back(pt);
    } else {
      out.lookahead.push_back(pt);
    }
  }
  return out;
}

double clamp_speed(double v, const PlannerConfig& config) { return std::clamp(v, 0.0, config.v_max); }

}  // namespace

std::vector<ShortTermPath> enumerate_candidates(const VehicleState& state, const Lane& reference,
                                                const PlannerConfig& config) {
  const std::size_t n = config.steps_per_decision();
  const std::size_t maneuver = config.maneuver_steps();
  const auto proj = project_onto_polyline(reference.centerline, state.position);

  std::vector<ShortTermPath> out;
  out.reserve(config.lateral_offsets.size() * config.speed_deltas.size());
  for (double offset : config.lateral_offsets) {
    for (double delta : config.speed_deltas) {
      const SpeedProfile speed{state.speed, clamp_speed(state.speed + delta, config), n};
      double travel = 0.0;
      for (std::size_t k = 1; k <= maneuver; ++k) travel += speed.at(k) * config.dt_sim;
      const double preview = std::max(travel, config.min_preview);

      const Vec2 ahead = polyline_at_extended(reference.centerline, proj.s + preview).position;
      const Vec2 chord = ahead - proj.foot.position;
      const double angle = norm(chord) > 1e-9 ? std::atan2(chord.y, chord.x) : proj.foot.heading;
      const Frame frame = Frame::at(proj.foot.position, angle);

      const Vec2 rel = state.position - frame.origin;
      const double x0 = dot(rel, frame.u);
      const double y0 = dot(rel, frame.n);
      const double heading = std::clamp(wrap_angle(state.heading - angle), -kMaxRelativeHeading, kMaxRelativeHeading);
      const double span = std::max(dot(chord, frame.u) - x0, 1.0);
      const LateralProfile prof{x0, span, y0, std::tan(heading), offset};

      ShortTermPath c = build(state, frame, prof, x0, speed, config);
      c.index = out.size();
      c.lateral_offset = offset;
      out.push_back(std::move(c));
    }
  }
  return out;
}

ShortTermPath emergency_brake(const VehicleState& state, const PlannerConfig& config) {
  const double worst = *std::min_element(config.speed_deltas.begin(), config.speed_deltas.end());
  const SpeedProfile speed{state.speed, clamp_speed(state.speed + std::min(worst, 0.0), config),
                           config.steps_per_decision()};
  const Frame frame = Frame::at(state.position, state.heading);
  ShortTermPath c = build(state, frame, LateralProfile{}, 0.0, speed, config);
  c.index = kFallbackIndex;
  c.lateral_offset = 0.0;
  return c;
}

double goal_distance(Vec2 from, Vec2 goal, const Lane* reference) {
  if (reference == nullptr) return distance(from, goal);
  const auto g = project_onto_polyline(reference->centerline, goal);
  const auto p = project_onto_polyline(reference->centerline, from);
  return std::fabs(g.s - p.s) + std::fabs(g.lateral - p.lateral);
}

Features compute_features(const ShortTermPath& stp, const Environment& env, const PlannerConfig& config) {
  const auto& s = stp.samples;
  if (s.size() < 2) throw DegeneratePath("short-term path needs at least two samples");

  Features f;
  f.max_speed = s.front().speed;
  for (std::size_t k = 1; k < s.size(); ++k) {
    f.max_speed = std::max(f.max_speed, s[k].speed);
    f.max_acc = std::max(f.max_acc, s[k].acceleration);
    f.max_decel = std::max(f.max_decel, -s[k].acceleration);
    const double step = distance(s[k].location, s[k - 1].location);
    if (step > 0.0) {
      const double kappa = std::fabs(wrap_angle(s[k].direction - s[k - 1].direction)) / step;
      f.max_curv = std::max(f.max_curv, kappa);
      f.max_lat_acc = std::max(f.max_lat_acc, s[k].speed * s[k].speed * kappa);
    }
  }
  const TrajectoryPoint& end = stp.lookahead.empty() ? s.back() : stp.lookahead.back();
  f.goal_dist = goal_distance(end.location, env.goal, env.reference);
  if (env.reference != nullptr) f.speed_limit = env.reference->speed_limit;

  const double ego_r = config.ego_radius();
  auto hits = [&](const TrajectoryPoint& p, std::size_t k) {
    const std::size_t g = env.sample_index + k;
    for (const ObjectTrack& o : env.objects) {
      if (g >= o.path.size()) continue;
      if (distance(p.location, o.path.points[g].location) < ego_r + o.radius) return true;
    }
    return false;
  };
  for (std::size_t k = 1; k < s.size() && !f.collides; ++k) f.collides = hits(s[k], k);
  for (std::size_t k = 0; k < stp.lookahead.size() && !f.collides; ++k) {
    f.collides = hits(stp.lookahead[k], s.size() + k);
  }

  if (!env.drivable.empty()) {
    auto on_road = [&](Vec2 p) {
      return std::any_of(env.drivable.begin(), env.drivable.end(), [&](const Lane& lane) {
        return project_onto_polyline(lane.centerline, p).distance <= 0.5 * lane.width;
      });
    };
    for (std::size_t k = 1; k < s.size() && !f.off_road; ++k) f.off_road = !on_road(s[k].location);
    for (std::size_t k = 0; k < stp.lookahead.size() && !f.off_road; ++k) {
      f.off_road = !on_road(stp.lookahead[k].location);
    }
  }
  return f;
}

std::array<bool, kWeightCount> guard_predicates(const Features& f, const PlannerConfig& config) {
  return {f.max_lat_acc > 0.0,          f.max_lat_acc > config.tau_lat, f.max_speed > f.speed_limit,
          f.max_acc > config.tau_acc,   f.max_decel > config.tau_dec,   f.max_curv > config.tau_curv};
}

CostBreakdown cost(const Features& f, const Weights& w, const PlannerConfig& config) {
  const auto guard = guard_predicates(f, config);
  CostBreakdown c;
  c.terms[0] = w[0] * f.max_lat_acc;
  for (std::size_t i = 1; i < kWeightCount; ++i) c.terms[i] = guard[i] ? w[i] : 0.0;
  c.progress = config.c_prog * f.goal_dist;
  c.total = c.terms[0] + c.terms[1] + c.terms[2] + c.terms[3] + c.terms[4] + c.terms[5] + c.progress;
  return c;
}

std::vector<bool> contending(std::span<const Features> features, const PlannerConfig& config) {
  const std::size_t n = features.size();
  std::vector<std::array<bool, kWeightCount>> guards(n);
  for (std::size_t i = 0; i < n; ++i) guards[i] = guard_predicates(features[i], config);

  auto dominates = [&](std::size_t a, std::size_t b) {
    const Features& fa = features[a];
    const Features& fb = features[b];
    // Margin keeps the strict goal-distance gap above floating rounding of the total.
    const double margin = 1e-9 * std::max(1.0, fb.goal_dist);
    if (!(fa.goal_dist < fb.goal_dist - margin)) return false;
    if (fa.max_lat_acc > fb.max_lat_acc) return false;
    for (std::size_t i = 1; i < kWeightCount; ++i) {
      if (guards[a][i] && !guards[b][i]) return false;
    }
    return true;
  };

  std::vector<bool> out(n, false);
  for (std::size_t b = 0; b < n; ++b) {
    if (!features[b].feasible()) continue;
    bool dominated = false;
    for (std::size_t a = 0; a < n && !dominated; ++a) {
      dominated = a != b && features[a].feasible() && dominates(a, b);
    }
    out[b] = !dominated;
  }
  return out;
}

Decision decide(const VehicleState& state, const Environment& env, const Weights& w,
                const PlannerConfig& config) {
  if (env.reference == nullptr) throw ValidationError("/map/lanes", "no reference lane");
  std::vector<ShortTermPath> candidates = enumerate_candidates(state, *env.reference, config);

  std::vector<Features> features;
  features.reserve(candidates.size());
  for (const auto& c : candidates) {
    features.push_back(compute_features(c, env, config));
  }

  Decision d;
  const std::vector<bool> live = contending(features, config);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!live[i]) continue;
    const auto g = guard_predicates(features[i], config);
    for (std::size_t k = 0; k < kWeightCount; ++k) d.firings[k] += g[k] ? 1 : 0;
  }

  std::size_t best = kFallbackIndex;
  double best_total = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!features[i].feasible()) continue;
    const double total = cost(features[i], w, config).total;
    if (best == kFallbackIndex || total < best_total) {
      best = i;
      best_total = total;
    }
  }

  if (best == kFallbackIndex) {
    d.chosen = emergency_brake(state, config);
    d.fallback = true;
  } else {
    d.chosen = std::move(candidates[best]);
  }
  return d;
}

std::vector<ObjectTrack> object_tracks(const Scenario& s, const PlannerConfig& config) {
  std::vector<ObjectTrack> tracks;
  tracks.reserve(s.objects.size());
  for (const ObjectInit& o : s.objects) {
    tracks.push_back({o.id, propagate_object(o, s.map, s.timeout + config.preview_time, config.dt_sim),
                      0.5 * std::hypot(o.length, o.width)});
  }
  return tracks;
}

std::vector<Path> object_paths(const Scenario& s, const PlannerConfig& config) {
  const std::size_t n = sample_count(s.timeout, config.dt_sim);
  std::vector<Path> out;
  out.reserve(s.objects.size());
  for (const ObjectInit& o : s.objects) out.push_back(propagate_object(o, s.map, s.timeout, config.dt_sim));
  for (auto& p : out) p.points.resize(n);
  return out;
}

PlanResult plan_traced(const Scenario& s, const Weights& w, const PlannerConfig& config) {
  config.validate();
  validate(w);
  const double decisions_f = std::round(s.timeout / config.dt_dec);
  if (!(s.timeout > 0.0) || decisions_f < 1.0 || std::fabs(decisions_f * config.dt_dec - s.timeout) > 1e-9) {
    throw InvalidTimeout("timeout " + std::to_string(s.timeout) + " is not a positive multiple of dt_dec " +
                         std::to_string(config.dt_dec));
  }
  const auto decisions = static_cast<std::size_t>(decisions_f);
  const std::size_t n = config.steps_per_decision();

  const Lane& reference = select_reference_lane(s.map, s.ego.goal);
  const std::vector<ObjectTrack> tracks = object_tracks(s, config);

  PlanResult out;
  out.path.points.reserve(decisions * n + 1);
  out.path.points.push_back({0.0, s.ego.position, s.ego.heading, s.ego.speed, s.ego.acceleration});
  out.choices.reserve(decisions);

  VehicleState state{0.0, s.ego.position, s.ego.heading, s.ego.speed, s.ego.acceleration};
  for (std::size_t m = 0; m < decisions; ++m) {
    const Environment env{&reference, s.ego.goal, tracks, m * n, s.map.lanes};
    Decision d = decide(state, env, w, config);
    for (std::size_t k = 0; k < kWeightCount; ++k) out.firings[k] += d.firings[k];
    out.fallbacks += d.fallback ? 1 : 0;
    out.choices.push_back(d.chosen.index);

    for (std::size_t k = 1; k < d.chosen.samples.size(); ++k) {
      TrajectoryPoint pt = d.chosen.samples[k];
      pt.t = static_cast<double>(m * n + k) * config.dt_sim;
      out.path.points.push_back(pt);
    }
    const TrajectoryPoint& last = out.path.points.back();
    state = {last.t, last.location, last.direction, last.speed, last.acceleration};
  }
  return out;
}

}  // namespace wcov
