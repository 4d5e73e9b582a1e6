#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadzero::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the quadzero command line with `args` (excluding the program name).
/// Data goes to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quadzero::cli
