#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsa::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitValidationFailed = 2;

/// Parses `args` (args[0] is the program name) and runs the subcommand.
/// Human-readable summaries go to `out`, diagnostics to `err`; data is only
/// ever written to files under `--out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsa::cli
