#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace embz {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `embz` subcommand (verify, verify-seq, eval, oracle, approx).
/// argv[0] is the program name. Human-readable output goes to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace embz
