#include <wcov/errors.hpp>
#include <wcov/propagation.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace wcov {

std::size_t sample_count(double timeout, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidStep("step must be > 0, got " + std::to_string(dt));
  if (!(timeout >= 0.0) || !std::isfinite(timeout)) {
    throw InvalidStep("timeout must be >= 0, got " + std::to_string(timeout));
  }
  const double steps = std::round(timeout / dt);
  if (std::fabs(steps * dt - timeout) > 1e-9) {
    throw InvalidStep("timeout " + std::to_string(timeout) + " is not a multiple of step " + std::to_string(dt));
  }
  return static_cast<std::size_t>(steps) + 1;
}

Path propagate_object(const ObjectInit& obj, const Map& map, double timeout, double dt) {
  const std::size_t n = sample_count(timeout, dt);

  const Lane* lane = nullptr;
  if (obj.lane_id) {
    lane = map.find_lane(*obj.lane_id);
    if (lane == nullptr) throw ValidationError("/objects/lane", "unknown lane '" + *obj.lane_id + "'");
  }

  double s0 = 0.0;
  Vec2 offset;  // initial position relative to its lane projection
  if (lane != nullptr) {
    const auto proj = project_onto_polyline(lane->centerline, obj.position);
    s0 = proj.s;
    offset = obj.position - proj.foot.position;
  }

  auto place = [&](double s) -> PolylinePoint {
    if (lane == nullptr) return {obj.position + s * unit(obj.heading), obj.heading};
    const PolylinePoint p = polyline_at_extended(lane->centerline, s0 + s);
    return {p.position + offset, p.heading};
  };

  Path path;
  path.points.reserve(n);
  path.points.push_back({0.0, obj.position, obj.heading, obj.speed, obj.acceleration});

  double travelled = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    const double v = std::max(0.0, obj.speed + obj.acceleration * t);
    const TrajectoryPoint& prev = path.points.back();
    TrajectoryPoint pt;
    pt.t = t;
    if (v > 0.0) {
      travelled += v * dt;
      const PolylinePoint at = place(travelled);
      pt.location = at.position;
      pt.direction = at.heading;
    } else {
      pt.location = prev.location;
      pt.direction = prev.direction;
    }
    // Stored kinematics are finite differences of the sampled locations.
    pt.speed = distance(pt.location, prev.location) / dt;
    pt.acceleration = (pt.speed - prev.speed) / dt;
    path.points.push_back(pt);
  }
  return path;
}

}  // namespace wcov
