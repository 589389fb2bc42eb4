#pragma once

#include <ostream>

namespace histograph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one command line. Results go to `out` (or the --out file),
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color = false);

/// Whether diagnostics on stderr should carry ANSI colour: only for a
/// terminal, and never when HISTOGRAPH_NO_COLOR is set.
bool stderr_wants_color();

}  // namespace histograph::cli
