#include <wcov/planner_io.hpp>
#include <wcov/scenario_io.hpp>

#include "json_util.hpp"

#include <iomanip>
#include <sstream>

namespace wcov {

using detail::Json;

Weights parse_weights(std::string_view text) {
  using namespace detail;
  const Json root = parse_json(text);
  require_object(root, "");
  reject_unknown(root, "", {"w1", "w2", "w3", "w4", "w5", "w6"});
  Weights w;
  for (std::size_t i = 0; i < kWeightCount; ++i) {
    w[i] = number_field(root, "", "w" + std::to_string(i + 1));
  }
  validate(w);
  return w;
}

std::string serialize_weights(const Weights& w) {
  std::ostringstream os;
  os << std::setprecision(17) << "{\n";
  for (std::size_t i = 0; i < kWeightCount; ++i) {
    os << "  \"w" << i + 1 << "\": " << w[i] << (i + 1 < kWeightCount ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

Weights load_weights(const std::filesystem::path& file) { return parse_weights(read_text_file(file)); }

PlannerConfig parse_planner_config(std::string_view text) {
  using namespace detail;
  const Json root = parse_json(text);
  require_object(root, "");
  reject_unknown(root, "",
                 {"dt_dec", "dt_sim", "lateral_offsets", "speed_deltas", "tau_lat", "tau_acc", "tau_dec",
                  "tau_curv", "c_prog", "safety_margin", "v_max", "ego_length", "ego_width", "preview_time",
                  "maneuver_time", "min_preview"});
  PlannerConfig c;
  auto scalar = [&](std::string_view key, double& out) {
    if (auto it = root.find(std::string(key)); it != root.end()) out = as_number(*it, child("", key));
  };
  auto list = [&](std::string_view key, std::vector<double>& out) {
    if (auto it = root.find(std::string(key)); it != root.end()) out = number_list(*it, child("", key));
  };
  scalar("dt_dec", c.dt_dec);
  scalar("dt_sim", c.dt_sim);
  list("lateral_offsets", c.lateral_offsets);
  list("speed_deltas", c.speed_deltas);
  scalar("tau_lat", c.tau_lat);
  scalar("tau_acc", c.tau_acc);
  scalar("tau_dec", c.tau_dec);
  scalar("tau_curv", c.tau_curv);
  scalar("c_prog", c.c_prog);
  scalar("safety_margin", c.safety_margin);
  scalar("v_max", c.v_max);
  scalar("ego_length", c.ego_length);
  scalar("ego_width", c.ego_width);
  scalar("preview_time", c.preview_time);
  scalar("maneuver_time", c.maneuver_time);
  scalar("min_preview", c.min_preview);
  c.validate();
  return c;
}

PlannerConfig load_planner_config(const std::filesystem::path& file) {
  return parse_planner_config(read_text_file(file));
}

}  // namespace wcov
