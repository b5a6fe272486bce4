#pragma once

#include <wcov/geometry.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wcov {

/// A directed lane: traversal follows centerline order.
struct Lane {
  std::string id;
  std::vector<Vec2> centerline;
  double width = 0.0;        ///< m
  double speed_limit = 0.0;  ///< m/s

  double length() const { return polyline_length(centerline); }
};

struct Map {
  std::vector<Lane> lanes;

  const Lane* find_lane(const std::string& id) const;
};

struct ObjectInit {
  std::string id;
  Vec2 position;
  double length = 0.0;
  double width = 0.0;
  double speed = 0.0;
  double acceleration = 0.0;
  double heading = 0.0;
  std::optional<std::string> lane_id;

  /// Static objects are dynamic objects with no velocity and no acceleration.
  bool is_static() const { return speed == 0.0 && acceleration == 0.0; }
};

struct EgoInit {
  Vec2 position;
  double speed = 0.0;
  double acceleration = 0.0;
  double heading = 0.0;
  Vec2 goal;
};

struct Scenario {
  std::string id;
  Map map;
  EgoInit ego;
  std::vector<ObjectInit> objects;
  double timeout = 0.0;  ///< TO, seconds
};

/// Checks every Scenario invariant; throws ValidationError naming the field.
void validate(const Scenario& s);

}  // namespace wcov
