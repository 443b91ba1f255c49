#pragma once

#include <ostream>

namespace tt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidState = 1;
inline constexpr int kExitUsage = 2;

// Parses argv (argv[0] is the program name) and runs one subcommand:
// tester-info, eval, multi, sweep, compare-rs, bench, make-state. Reports
// go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tt::cli
