#include <wcov/errors.hpp>
#include <wcov/metrics.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace wcov {
namespace {

Path line_path(std::size_t n, double dt, Vec2 start, Vec2 step) {
  Path p;
  for (std::size_t i = 0; i < n; ++i)
    p.points.push_back({dt * static_cast<double>(i), start + static_cast<double>(i) * step, 0.0, 0.0, 0.0});
  return p;
}

TEST(MinDistance, AbsentWithoutObjects) {
  EXPECT_FALSE(min_distance(line_path(5, 0.1, {0, 0}, {1, 0}), {}).has_value());
}

TEST(MinDistance, ZeroWhenCoinciding) {
  const Path ego = line_path(5, 0.1, {0, 0}, {1, 0});
  const std::vector<Path> objs{line_path(5, 0.1, {4, 0}, {0, 0})};
  EXPECT_EQ(min_distance(ego, objs), 0.0);
}

TEST(MinDistance, StaticObjectBesideStraightPass) {
  const Path ego = line_path(11, 0.1, {0, 0}, {1, 0});
  const std::vector<Path> objs{line_path(11, 0.1, {5, 3}, {0, 0})};
  EXPECT_DOUBLE_EQ(*min_distance(ego, objs), 3.0);

  // Off-grid object: compare against a brute-force scan.
  const Path ego2 = line_path(11, 0.1, {0, 0}, {0.7, 0});
  const std::vector<Path> objs2{line_path(11, 0.1, {5, 3}, {0, 0})};
  double best = INFINITY;
  for (const auto& p : ego2.points) best = std::min(best, std::hypot(p.location.x - 5, p.location.y - 3));
  EXPECT_EQ(*min_distance(ego2, objs2), best);
  EXPECT_GT(best, 3.0);
}

TEST(MinDistance, TrueMinimumAndSymmetric) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    Path ego = line_path(n, 0.1, {u(rng), u(rng)}, {u(rng) * 0.1, u(rng) * 0.1});
    std::vector<Path> objs;
    for (int o = 0; o < 3; ++o) objs.push_back(line_path(n, 0.1, {u(rng), u(rng)}, {u(rng) * 0.1, u(rng) * 0.1}));
    const double md = *min_distance(ego, objs);
    double best = INFINITY;
    for (const auto& obj : objs)
      for (std::size_t i = 0; i < n; ++i) {
        const double d = distance(ego.points[i].location, obj.points[i].location);
        EXPECT_LE(md, d);
        best = std::min(best, d);
      }
    EXPECT_EQ(md, best);
    const std::vector<Path> swapped{ego};
    EXPECT_EQ(*min_distance(objs[0], swapped), *min_distance(ego, std::span(objs).first(1)));
  }
}

TEST(MinDistance, MismatchedGridsThrow) {
  const Path ego = line_path(5, 0.1, {0, 0}, {1, 0});
  const std::vector<Path> objs{line_path(6, 0.1, {0, 0}, {1, 0})};
  EXPECT_THROW(min_distance(ego, objs), LengthMismatch);
  const std::vector<Path> shifted{line_path(5, 0.2, {0, 0}, {1, 0})};
  EXPECT_THROW(min_distance(ego, shifted), LengthMismatch);
}

TEST(Comfort, Examples) {
  EXPECT_EQ(comfort(line_path(5, 0.1, {0, 0}, {1, 0})), 0.0);
  Path p = line_path(3, 0.1, {0, 0}, {1, 0});
  p.points[0].acceleration = 1;
  p.points[1].acceleration = -4;
  p.points[2].acceleration = 2;
  EXPECT_EQ(comfort(p), 4.0);
  Path one = line_path(1, 0.1, {0, 0}, {0, 0});
  one.points[0].acceleration = -2.5;
  EXPECT_EQ(comfort(one), 2.5);
  EXPECT_THROW(comfort(Path{}), EmptyPath);
}

TEST(Comfort, TimeReversalInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Path p = line_path(1 + rng() % 40, 0.1, {0, 0}, {1, 0});
    for (auto& pt : p.points) pt.acceleration = u(rng);
    Path r = p;
    std::reverse(r.points.begin(), r.points.end());
    EXPECT_EQ(comfort(p), comfort(r));
  }
}

}  // namespace
}  // namespace wcov
