#pragma once

#include <wcov/path.hpp>

#include <array>
#include <span>
#include <string_view>

namespace wcov {

enum class OracleKind { Path, Safety, Comfort };

inline constexpr std::array<OracleKind, 3> kAllOracles{OracleKind::Path, OracleKind::Safety,
                                                       OracleKind::Comfort};

/// "PO", "SO", "CO"
std::string_view oracle_name(OracleKind k);
inline constexpr std::size_t oracle_slot(OracleKind k) { return static_cast<std::size_t>(k); }

struct OracleThresholds {
  double path = 0.0;     ///< theta_P, m
  double safety = 0.0;   ///< theta_S, m
  double comfort = 0.0;  ///< theta_C, m/s^2

  void validate() const;
};

/// True iff some timestep has the two ego locations more than `theta` apart.
bool killed_path(const Path& p, const Path& q, double theta);

/// True iff |minDis(p) - minDis(q)| > theta; false without objects.
bool killed_safety(const Path& p, const Path& q, std::span<const Path> objects, double theta);

/// True iff |comf(p) - comf(q)| > theta.
bool killed_comfort(const Path& p, const Path& q, double theta);

}  // namespace wcov
