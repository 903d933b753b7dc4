#pragma once

#include <iosfwd>

namespace chromabound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. Reports go to `out`, diagnostics to `err`, and a
/// graph argument of "-" reads graph6 lines from `in`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace chromabound::cli
