#include <wcov/errors.hpp>
#include <wcov/geometry.hpp>

#include <limits>
#include <numbers>
#include <string>

namespace wcov {

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::remainder(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

double polyline_length(std::span<const Vec2> pts) {
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) total += distance(pts[i - 1], pts[i]);
  return total;
}

namespace {

constexpr double kArcTolerance = 1e-9;

PolylinePoint on_segment(Vec2 a, Vec2 b, double along) {
  const Vec2 d = b - a;
  const double len = norm(d);
  const double f = along / len;
  return {a + f * d, std::atan2(d.y, d.x)};
}

}  // namespace

PolylinePoint polyline_at(std::span<const Vec2> pts, double s) {
  if (pts.size() < 2) throw OutOfRange("polyline needs at least two points");
  const double total = polyline_length(pts);
  if (!(s >= -kArcTolerance) || !(s <= total + kArcTolerance)) {
    throw OutOfRange("arc length " + std::to_string(s) + " outside [0, " + std::to_string(total) + "]");
  }
  if (s <= 0.0) return on_segment(pts[0], pts[1], 0.0);
  double acc = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double len = distance(pts[i - 1], pts[i]);
    if (s <= acc + len || i + 1 == pts.size()) {
      if (i + 1 == pts.size() && s >= total) return {pts.back(), on_segment(pts[i - 1], pts[i], len).heading};
      return on_segment(pts[i - 1], pts[i], s - acc);
    }
    acc += len;
  }
  return {pts.back(), 0.0};  // unreachable
}

PolylinePoint polyline_at_extended(std::span<const Vec2> pts, double s) {
  if (pts.size() < 2) throw OutOfRange("polyline needs at least two points");
  if (s < 0.0) return on_segment(pts[0], pts[1], s);
  const double total = polyline_length(pts);
  if (s > total) {
    const std::size_t n = pts.size();
    const double last = distance(pts[n - 2], pts[n - 1]);
    return on_segment(pts[n - 2], pts[n - 1], last + (s - total));
  }
  return polyline_at(pts, s);
}

PolylineProjection project_onto_polyline(std::span<const Vec2> pts, Vec2 p) {
  if (pts.size() < 2) throw OutOfRange("polyline needs at least two points");
  PolylineProjection best;
  best.distance = std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Vec2 a = pts[i - 1];
    const Vec2 d = pts[i] - a;
    const double len2 = dot(d, d);
    const double len = std::sqrt(len2);
    double f = dot(p - a, d) / len2;
    if (f < 0.0) f = 0.0;
    if (f > 1.0) f = 1.0;
    const Vec2 foot = a + f * d;
    const double dist = distance(p, foot);
    if (dist < best.distance) {
      best.distance = dist;
      best.s = acc + f * len;
      best.lateral = cross(d, p - a) / len;
      best.foot = {foot, std::atan2(d.y, d.x)};
    }
    acc += len;
  }
  return best;
}

}  // namespace wcov
