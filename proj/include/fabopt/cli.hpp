#pragma once

#include <iosfwd>

namespace fabopt {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // I/O, invalid input, failed verification
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;  // solver size cap exceeded

/// Entry point behind the `fabopt` executable. Verbs: solve, sweep, reduce,
/// verify, gen, export-lp, bench, serve.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fabopt
