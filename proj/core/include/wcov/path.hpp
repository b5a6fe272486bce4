#pragma once

#include <wcov/geometry.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace wcov {

/// One timestamped sample of a path: (t, location, direction, speed, acceleration).
struct TrajectoryPoint {
  double t = 0.0;
  Vec2 location;
  double direction = 0.0;
  double speed = 0.0;
  double acceleration = 0.0;

  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct Path {
  std::vector<TrajectoryPoint> points;

  bool empty() const noexcept { return points.empty(); }
  std::size_t size() const noexcept { return points.size(); }
  const TrajectoryPoint& front() const { return points.front(); }
  const TrajectoryPoint& back() const { return points.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Tolerance used when comparing timestamp grids and finite-difference
/// consistency of speed and acceleration.
inline constexpr double kPathTolerance = 1e-9;

/// Returns an empty string when `p` satisfies every Path invariant for step
/// `dt` (uniform timestamps starting at 0, finite-difference speeds and
/// accelerations); otherwise a description of the first violation.
std::string check_path_consistency(const Path& p, double dt);

/// True when both paths carry the same number of samples with timestamps
/// equal within kPathTolerance.
bool same_time_grid(const Path& a, const Path& b);

/// CSV with header `t,x,y,heading,speed,accel`, six decimals per value.
void write_path_csv(std::ostream& os, const Path& p);
std::string path_to_csv(const Path& p);

}  // namespace wcov
