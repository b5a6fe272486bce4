#pragma once

#include <wcov/path.hpp>

#include <optional>
#include <span>

namespace wcov {

/// Safety metric: minimum centre-to-centre distance between the ego and any
/// object over all timesteps. Absent when there are no objects. Throws
/// LengthMismatch when the timestamp grids differ.
std::optional<double> min_distance(const Path& ego, std::span<const Path> objects);

/// Comfort metric: max |a_i| over the path. Throws EmptyPath.
double comfort(const Path& ego);

}  // namespace wcov
