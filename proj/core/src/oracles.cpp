#include <wcov/errors.hpp>
#include <wcov/metrics.hpp>
#include <wcov/oracles.hpp>

#include <cmath>

namespace wcov {

std::string_view oracle_name(OracleKind k) {
  switch (k) {
    case OracleKind::Path: return "PO";
    case OracleKind::Safety: return "SO";
    case OracleKind::Comfort: return "CO";
  }
  return "?";
}

void OracleThresholds::validate() const {
  auto check = [](double v, const char* field) {
    if (!std::isfinite(v) || v < 0.0) throw ValidationError(field, "threshold must be finite and >= 0");
  };
  check(path, "/theta_p");
  check(safety, "/theta_s");
  check(comfort, "/theta_c");
}

bool killed_path(const Path& p, const Path& q, double theta) {
  if (!same_time_grid(p, q)) throw LengthMismatch("paths have different timestamp grids");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (distance(p.points[i].location, q.points[i].location) > theta) return true;
  }
  return false;
}

bool killed_safety(const Path& p, const Path& q, std::span<const Path> objects, double theta) {
  if (!same_time_grid(p, q)) throw LengthMismatch("paths have different timestamp grids");
  const auto a = min_distance(p, objects);
  const auto b = min_distance(q, objects);
  // No objects: both minima are absent and the difference is defined as 0.
  const double diff = (a && b) ? std::fabs(*a - *b) : 0.0;
  return diff > theta;
}

bool killed_comfort(const Path& p, const Path& q, double theta) {
  return std::fabs(comfort(p) - comfort(q)) > theta;
}

}  // namespace wcov
