#include <wcov/scenario_io.hpp>

#include "json_util.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace wcov {

using detail::Json;

const Lane* Map::find_lane(const std::string& id) const {
  for (const auto& lane : lanes) {
    if (lane.id == id) return &lane;
  }
  return nullptr;
}

namespace {

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ValidationError(field, message);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void validate(const Scenario& s) {
  require(!s.map.lanes.empty(), "/map/lanes", "map needs at least one lane");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < s.map.lanes.size(); ++i) {
    const Lane& lane = s.map.lanes[i];
    const std::string base = "/map/lanes/" + std::to_string(i);
    require(ids.insert(lane.id).second, base + "/id", "duplicate lane id '" + lane.id + "'");
    require(lane.centerline.size() >= 2, base + "/centerline", "needs at least two points");
    for (std::size_t k = 0; k < lane.centerline.size(); ++k) {
      require(is_finite(lane.centerline[k]), base + "/centerline/" + std::to_string(k), "non-finite point");
      if (k > 0) {
        require(!(lane.centerline[k] == lane.centerline[k - 1]), base + "/centerline/" + std::to_string(k),
                "repeats the previous point");
      }
    }
    require(finite(lane.width) && lane.width > 0.0, base + "/width", "must be > 0");
    require(finite(lane.speed_limit) && lane.speed_limit > 0.0, base + "/speed_limit", "must be > 0");
  }

  require(is_finite(s.ego.position), "/ego/position", "must be finite");
  require(finite(s.ego.speed) && s.ego.speed >= 0.0, "/ego/speed", "must be >= 0");
  require(finite(s.ego.acceleration), "/ego/acceleration", "must be finite");
  require(finite(s.ego.heading), "/ego/heading", "must be finite");
  require(is_finite(s.ego.goal), "/ego/goal", "must be finite");

  std::set<std::string> object_ids;
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    const ObjectInit& o = s.objects[i];
    const std::string base = "/objects/" + std::to_string(i);
    require(object_ids.insert(o.id).second, base + "/id", "duplicate object id '" + o.id + "'");
    require(is_finite(o.position), base + "/position", "must be finite");
    require(finite(o.length) && o.length > 0.0, base + "/size/0", "length must be > 0");
    require(finite(o.width) && o.width > 0.0, base + "/size/1", "width must be > 0");
    require(finite(o.speed) && o.speed >= 0.0, base + "/speed", "must be >= 0");
    require(finite(o.acceleration), base + "/acceleration", "must be finite");
    require(finite(o.heading), base + "/heading", "must be finite");
    if (o.lane_id) {
      require(s.map.find_lane(*o.lane_id) != nullptr, base + "/lane", "unknown lane '" + *o.lane_id + "'");
    }
  }

  require(finite(s.timeout) && s.timeout > 0.0, "/timeout", "must be > 0");
}

Scenario parse_scenario(std::string_view text) {
  using namespace detail;
  const Json root = parse_json(text);
  require_object(root, "");
  reject_unknown(root, "", {"id", "map", "ego", "objects", "timeout"});

  Scenario s;
  s.id = as_string(require_key(root, "", "id"), "/id");

  const Json& map = require_object(require_key(root, "", "map"), "/map");
  reject_unknown(map, "/map", {"lanes"});
  const Json& lanes = as_array(require_key(map, "/map", "lanes"), "/map/lanes");
  for (std::size_t i = 0; i < lanes.size(); ++i) {
    const std::string p = child("/map/lanes", i);
    const Json& l = require_object(lanes[i], p);
    reject_unknown(l, p, {"id", "centerline", "width", "speed_limit"});
    Lane lane;
    lane.id = as_string(require_key(l, p, "id"), child(p, "id"));
    const Json& cl = as_array(require_key(l, p, "centerline"), child(p, "centerline"));
    for (std::size_t k = 0; k < cl.size(); ++k) lane.centerline.push_back(as_vec2(cl[k], child(child(p, "centerline"), k)));
    lane.width = number_field(l, p, "width");
    lane.speed_limit = number_field(l, p, "speed_limit");
    s.map.lanes.push_back(std::move(lane));
  }

  const Json& ego = require_object(require_key(root, "", "ego"), "/ego");
  reject_unknown(ego, "/ego", {"position", "speed", "acceleration", "heading", "goal"});
  s.ego.position = as_vec2(require_key(ego, "/ego", "position"), "/ego/position");
  s.ego.speed = number_field(ego, "/ego", "speed");
  s.ego.acceleration = number_field(ego, "/ego", "acceleration");
  s.ego.heading = number_field(ego, "/ego", "heading");
  s.ego.goal = as_vec2(require_key(ego, "/ego", "goal"), "/ego/goal");

  if (auto it = root.find("objects"); it != root.end()) {
    const Json& objs = as_array(*it, "/objects");
    for (std::size_t i = 0; i < objs.size(); ++i) {
      const std::string p = child("/objects", i);
      const Json& o = require_object(objs[i], p);
      reject_unknown(o, p, {"id", "position", "size", "speed", "acceleration", "heading", "lane"});
      ObjectInit obj;
      obj.id = as_string(require_key(o, p, "id"), child(p, "id"));
      obj.position = as_vec2(require_key(o, p, "position"), child(p, "position"));
      const Vec2 size = as_vec2(require_key(o, p, "size"), child(p, "size"));
      obj.length = size.x;
      obj.width = size.y;
      obj.speed = number_field(o, p, "speed");
      obj.acceleration = number_field(o, p, "acceleration");
      obj.heading = number_field(o, p, "heading");
      if (auto lit = o.find("lane"); lit != o.end()) obj.lane_id = as_string(*lit, child(p, "lane"));
      s.objects.push_back(std::move(obj));
    }
  }

  s.timeout = number_field(root, "", "timeout");
  validate(s);
  return s;
}

namespace {

// Shortest text that parses back to the same double.
std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  const std::string full = os.str();
  for (int prec = 1; prec < 17; ++prec) {
    std::ostringstream t;
    t << std::setprecision(prec) << v;
    if (std::stod(t.str()) == v) return t.str();
  }
  return full;
}

std::string vec(Vec2 v) { return "[" + num(v.x) + ", " + num(v.y) + "]"; }

std::string quote(const std::string& s) { return Json(s).dump(); }

}  // namespace

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  os << "{\n  \"id\": " << quote(s.id) << ",\n  \"map\": {\n    \"lanes\": [";
  for (std::size_t i = 0; i < s.map.lanes.size(); ++i) {
    const Lane& l = s.map.lanes[i];
    os << (i ? ",\n" : "\n") << "      {\"id\": " << quote(l.id) << ", \"centerline\": [";
    for (std::size_t k = 0; k < l.centerline.size(); ++k) os << (k ? ", " : "") << vec(l.centerline[k]);
    os << "], \"width\": " << num(l.width) << ", \"speed_limit\": " << num(l.speed_limit) << "}";
  }
  os << "\n    ]\n  },\n";
  os << "  \"ego\": {\"position\": " << vec(s.ego.position) << ", \"speed\": " << num(s.ego.speed)
     << ", \"acceleration\": " << num(s.ego.acceleration) << ", \"heading\": " << num(s.ego.heading)
     << ", \"goal\": " << vec(s.ego.goal) << "},\n";
  os << "  \"objects\": [";
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    const ObjectInit& o = s.objects[i];
    os << (i ? ",\n" : "\n") << "    {\"id\": " << quote(o.id) << ", \"position\": " << vec(o.position)
       << ", \"size\": " << vec({o.length, o.width}) << ", \"speed\": " << num(o.speed)
       << ", \"acceleration\": " << num(o.acceleration) << ", \"heading\": " << num(o.heading);
    if (o.lane_id) os << ", \"lane\": " << quote(*o.lane_id);
    os << "}";
  }
  os << (s.objects.empty() ? "],\n" : "\n  ],\n");
  os << "  \"timeout\": " << num(s.timeout) << "\n}\n";
  return os.str();
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Scenario load_scenario(const std::filesystem::path& file) { return parse_scenario(read_text_file(file)); }

bool operator==(const Lane& a, const Lane& b) {
  return a.id == b.id && a.centerline == b.centerline && a.width == b.width && a.speed_limit == b.speed_limit;
}
bool operator==(const Map& a, const Map& b) { return a.lanes == b.lanes; }
bool operator==(const ObjectInit& a, const ObjectInit& b) {
  return a.id == b.id && a.position == b.position && a.length == b.length && a.width == b.width &&
         a.speed == b.speed && a.acceleration == b.acceleration && a.heading == b.heading && a.lane_id == b.lane_id;
}
bool operator==(const EgoInit& a, const EgoInit& b) {
  return a.position == b.position && a.speed == b.speed && a.acceleration == b.acceleration &&
         a.heading == b.heading && a.goal == b.goal;
}
bool operator==(const Scenario& a, const Scenario& b) {
  return a.id == b.id && a.map == b.map && a.ego == b.ego && a.objects == b.objects && a.timeout == b.timeout;
}

}  // namespace wcov
