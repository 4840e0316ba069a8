#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace herglotz::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 1;
inline constexpr int kDiverged = 2;  // non-simple behavior or a divergent tableau
inline constexpr int kCheckFailed = 3;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`; artifacts are written under --out when given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace herglotz::cli
