#pragma once

#include <wcov/path.hpp>
#include <wcov/scenario.hpp>

namespace wcov {

/// Number of samples of a run of length `timeout` at step `dt`, i.e.
/// timeout/dt + 1. Throws InvalidStep when dt <= 0 or timeout is not an
/// integer multiple of dt (tolerance 1e-9).
std::size_t sample_count(double timeout, double dt);

/// Computes the path of a dynamic object offline, from its initial state only.
///
/// Speed follows v(t) = max(0, v0 + a0 t); arc length advances by v(t_i)*dt
/// per step. With a lane the object follows the centerline (keeping its
/// initial offset from the projection point) and continues straight past
/// the lane end; without one it moves along a ray at its heading.
Path propagate_object(const ObjectInit& obj, const Map& map, double timeout, double dt);

}  // namespace wcov
