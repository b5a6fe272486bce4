#include <wcov/errors.hpp>
#include <wcov/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace wcov {

std::optional<double> min_distance(const Path& ego, std::span<const Path> objects) {
  for (const Path& o : objects) {
    if (!same_time_grid(ego, o)) throw LengthMismatch("object path timestamps differ from the ego path");
  }
  if (objects.empty()) return std::nullopt;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ego.size(); ++i) {
    for (const Path& o : objects) best = std::min(best, distance(ego.points[i].location, o.points[i].location));
  }
  return best;
}

double comfort(const Path& ego) {
  if (ego.empty()) throw EmptyPath("comfort of an empty path");
  double best = 0.0;
  for (const auto& p : ego.points) best = std::max(best, std::fabs(p.acceleration));
  return best;
}

}  // namespace wcov
