#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amcurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amcurve::cli
