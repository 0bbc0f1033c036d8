#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gpdrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one `gpdrep` invocation. `args` excludes the program name. Output
/// goes to `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpdrep::cli
