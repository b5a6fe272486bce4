#include <wcov/errors.hpp>
#include <wcov/scenario_io.hpp>

#include <gtest/gtest.h>

#include <random>
#include <string>

namespace wcov {
namespace {

const char* kMinimal = R"({
  "id": "minimal",
  "map": {"lanes": [{"id": "L", "centerline": [[0, 0], [100, 0]], "width": 3.5, "speed_limit": 13.9}]},
  "ego": {"position": [0, 0], "speed": 5, "acceleration": 0, "heading": 0, "goal": [90, 0]},
  "objects": [],
  "timeout": 5.0
})";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

TEST(ParseScenario, MinimalDocument) {
  const Scenario s = parse_scenario(kMinimal);
  EXPECT_EQ(s.id, "minimal");
  EXPECT_EQ(s.objects.size(), 0u);
  EXPECT_DOUBLE_EQ(s.timeout, 5.0);
  ASSERT_EQ(s.map.lanes.size(), 1u);
  EXPECT_DOUBLE_EQ(s.map.lanes[0].length(), 100.0);
}

TEST(ParseScenario, MissingTimeoutNamesField) {
  const std::string text = replace(kMinimal, ",\n  \"timeout\": 5.0", "");
  try {
    parse_scenario(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "/timeout");
    EXPECT_NE(std::string(e.what()).find("timeout"), std::string::npos);
  }
}

TEST(ParseScenario, NegativeTimeoutIsValidationError) {
  const std::string text = replace(kMinimal, "\"timeout\": 5.0", "\"timeout\": -1.0");
  try {
    parse_scenario(text);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "/timeout");
  }
}

TEST(ParseScenario, DanglingLaneReference) {
  const std::string text = replace(kMinimal, "\"objects\": []",
                                   R"("objects": [{"id": "o", "position": [5, 0], "size": [4, 2], "speed": 1,
                                       "acceleration": 0, "heading": 0, "lane": "nope"}])");
  try {
    parse_scenario(text);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "/objects/0/lane");
  }
}

TEST(ParseScenario, UnknownKeyRejected) {
  const std::string text = replace(kMinimal, "\"timeout\": 5.0", "\"timeout\": 5.0, \"extra\": 1");
  EXPECT_THROW(parse_scenario(text), ParseError);
}

TEST(ParseScenario, MalformedSyntax) { EXPECT_THROW(parse_scenario("{\"id\": "), ParseError); }

TEST(ParseScenario, WrongTypeNamesField) {
  const std::string text = replace(kMinimal, "\"width\": 3.5", "\"width\": \"wide\"");
  try {
    parse_scenario(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "/map/lanes/0/width");
  }
}

TEST(ParseScenario, RepeatedCenterlinePointRejected) {
  const std::string text = replace(kMinimal, "[[0, 0], [100, 0]]", "[[0, 0], [0, 0], [100, 0]]");
  EXPECT_THROW(parse_scenario(text), ValidationError);
}

TEST(ParseScenario, NegativeSpeedRejected) {
  const std::string text = replace(kMinimal, "\"speed\": 5", "\"speed\": -5");
  EXPECT_THROW(parse_scenario(text), ValidationError);
}

Scenario random_scenario(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-500.0, 500.0);
  std::uniform_real_distribution<double> pos(0.1, 40.0);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_int_distribution<int> count(1, 4);
  Scenario s;
  s.id = "rand" + std::to_string(rng() % 1000);
  const int lanes = count(rng);
  for (int l = 0; l < lanes; ++l) {
    Lane lane;
    lane.id = "lane" + std::to_string(l);
    Vec2 p{coord(rng), coord(rng)};
    const int pts = count(rng) + 1;
    for (int k = 0; k < pts; ++k) {
      lane.centerline.push_back(p);
      p = p + Vec2{pos(rng), pos(rng)};
    }
    lane.width = pos(rng);
    lane.speed_limit = pos(rng);
    s.map.lanes.push_back(lane);
  }
  s.ego = {{coord(rng), coord(rng)}, pos(rng), angle(rng), angle(rng), {coord(rng), coord(rng)}};
  const int objects = count(rng) - 1;
  for (int o = 0; o < objects; ++o) {
    ObjectInit obj;
    obj.id = "obj" + std::to_string(o);
    obj.position = {coord(rng), coord(rng)};
    obj.length = pos(rng);
    obj.width = pos(rng);
    obj.speed = pos(rng);
    obj.acceleration = angle(rng);
    obj.heading = angle(rng);
    if (rng() % 2) obj.lane_id = s.map.lanes[rng() % s.map.lanes.size()].id;
    s.objects.push_back(obj);
  }
  s.timeout = pos(rng);
  return s;
}

TEST(ScenarioProperties, SerializeParseRoundTrip) {
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 200; ++i) {
    const Scenario s = random_scenario(rng);
    validate(s);
    const Scenario back = parse_scenario(serialize_scenario(s));
    ASSERT_TRUE(back == s) << serialize_scenario(s);
  }
}

TEST(ScenarioProperties, BundledScenariosRoundTrip) {
  for (int i = 1; i <= 10; ++i) {
    const Scenario s = load_scenario(std::string(WCOV_SCENARIO_DIR) + "/s" + std::to_string(i) + ".json");
    EXPECT_TRUE(parse_scenario(serialize_scenario(s)) == s) << s.id;
  }
}

}  // namespace
}  // namespace wcov
