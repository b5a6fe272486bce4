#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wcov::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSimulation = 3;

/// Runs the `wcov` command line. `args` excludes the program name. Usage
/// text and diagnostics go to `err`; `out` only receives --help output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcov::cli
