#include <wcov/path.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace wcov {

std::string check_path_consistency(const Path& p, double dt) {
  if (p.empty()) return "path is empty";
  char buf[160];
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& pt = p.points[i];
    if (std::fabs(pt.t - static_cast<double>(i) * dt) > kPathTolerance) {
      std::snprintf(buf, sizeof buf, "sample %zu: timestamp %.12g, expected %.12g", i, pt.t,
                    static_cast<double>(i) * dt);
      return buf;
    }
    if (!(pt.speed >= 0.0)) {
      std::snprintf(buf, sizeof buf, "sample %zu: negative speed %.12g", i, pt.speed);
      return buf;
    }
    if (i == 0) continue;
    const auto& prev = p.points[i - 1];
    const double v = distance(pt.location, prev.location) / dt;
    if (std::fabs(v - pt.speed) > kPathTolerance) {
      std::snprintf(buf, sizeof buf, "sample %zu: speed %.12g, finite difference %.12g", i, pt.speed, v);
      return buf;
    }
    const double a = (pt.speed - prev.speed) / dt;
    if (std::fabs(a - pt.acceleration) > kPathTolerance) {
      std::snprintf(buf, sizeof buf, "sample %zu: acceleration %.12g, finite difference %.12g", i,
                    pt.acceleration, a);
      return buf;
    }
  }
  return {};
}

bool same_time_grid(const Path& a, const Path& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a.points[i].t - b.points[i].t) > kPathTolerance) return false;
  }
  return true;
}

void write_path_csv(std::ostream& os, const Path& p) {
  os << "t,x,y,heading,speed,accel\n";
  char buf[256];
  for (const auto& pt : p.points) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", pt.t, pt.location.x, pt.location.y,
                  pt.direction, pt.speed, pt.acceleration);
    os << buf;
  }
}

std::string path_to_csv(const Path& p) {
  std::ostringstream os;
  write_path_csv(os, p);
  return os.str();
}

}  // namespace wcov
