#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace derange::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a verification fails
/// and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace derange::cli
