#pragma once

#include <cmath>
#include <span>

namespace wcov {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline bool is_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Unit vector pointing along `heading` (radians, counter-clockwise from +x).
inline Vec2 unit(double heading) { return {std::cos(heading), std::sin(heading)}; }

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Point on a polyline together with the heading of the segment containing it.
struct PolylinePoint {
  Vec2 position;
  double heading = 0.0;
};

/// Orthogonal projection of a point onto a polyline.
struct PolylineProjection {
  double s = 0.0;        ///< arc length of the foot point
  double lateral = 0.0;  ///< signed offset, positive to the left of travel
  double distance = 0.0; ///< unsigned distance to the foot point
  PolylinePoint foot;
};

double polyline_length(std::span<const Vec2> pts);

/// Linear interpolation by arc length. Throws OutOfRange outside [0, length]
/// (a tolerance of 1e-9 m absorbs accumulated rounding at the end).
PolylinePoint polyline_at(std::span<const Vec2> pts, double s);

/// Like polyline_at, but continues straight along the first/last segment for
/// s < 0 or s > length.
PolylinePoint polyline_at_extended(std::span<const Vec2> pts, double s);

PolylineProjection project_onto_polyline(std::span<const Vec2> pts, Vec2 p);

}  // namespace wcov
