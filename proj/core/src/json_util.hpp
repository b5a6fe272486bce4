#pragma once

// Private helpers for the strict JSON readers (scenario, weights, config, suite).

#include <wcov/errors.hpp>
#include <wcov/geometry.hpp>

#include <json.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wcov::detail {

using Json = nlohmann::json;

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
}

inline std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}
inline std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

inline const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
  return j;
}

inline void reject_unknown(const Json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParseError(child(path, it.key()), "unknown key");
  }
}

inline const Json& require_key(const Json& obj, const std::string& path, std::string_view key) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ParseError(child(path, key), "missing required field '" + std::string(key) + "'");
  return *it;
}

inline double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path, "expected a number");
  return j.get<double>();
}

inline std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

inline const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

inline Vec2 as_vec2(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ParseError(path, "expected [x, y]");
  return {as_number(j[0], child(path, 0)), as_number(j[1], child(path, 1))};
}

inline double number_field(const Json& obj, const std::string& path, std::string_view key) {
  return as_number(require_key(obj, path, key), child(path, key));
}

inline std::vector<double> number_list(const Json& j, const std::string& path) {
  as_array(j, path);
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_number(j[i], child(path, i)));
  return out;
}

}  // namespace wcov::detail
