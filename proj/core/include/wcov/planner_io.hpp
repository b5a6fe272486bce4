#pragma once

#include <wcov/planner.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace wcov {

/// Weights file: an object with exactly the keys `w1`..`w6`, nonnegative numbers.
Weights parse_weights(std::string_view text);
std::string serialize_weights(const Weights& w);
Weights load_weights(const std::filesystem::path& file);

/// Planner config file: every key optional, defaults from PlannerConfig{}.
/// Keys: dt_dec, dt_sim, lateral_offsets, speed_deltas, tau_lat, tau_acc,
/// tau_dec, tau_curv, c_prog, safety_margin, v_max, ego_length, ego_width,
/// preview_time, maneuver_time, min_preview.
PlannerConfig parse_planner_config(std::string_view text);
PlannerConfig load_planner_config(const std::filesystem::path& file);

}  // namespace wcov
