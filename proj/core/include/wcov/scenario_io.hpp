#pragma once

#include <wcov/scenario.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace wcov {

/// Parses and validates a scenario JSON document.
///
/// Layout: `id`, `map.lanes[]` (`id`, `centerline` [[x,y],...], `width`,
/// `speed_limit`), `ego` (`position`, `speed`, `acceleration`, `heading`,
/// `goal`), `objects[]` (`id`, `position`, `size` [length,width], `speed`,
/// `acceleration`, `heading`, optional `lane`), `timeout`. SI units
/// throughout; unknown keys are rejected.
///
/// Throws ParseError for syntax/shape problems and ValidationError for
/// invariant violations.
Scenario parse_scenario(std::string_view text);

/// Serializes to the same JSON layout. Numbers are written with
/// round-trip precision, so parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

Scenario load_scenario(const std::filesystem::path& file);

/// Reads a whole file as text; throws wcov::Error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& file);

bool operator==(const Lane& a, const Lane& b);
bool operator==(const Map& a, const Map& b);
bool operator==(const ObjectInit& a, const ObjectInit& b);
bool operator==(const EgoInit& a, const EgoInit& b);
bool operator==(const Scenario& a, const Scenario& b);

}  // namespace wcov
