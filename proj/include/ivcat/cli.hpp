#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ivcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;

/// Runs one invocation.  args excludes the program name.  Output is buffered
/// and written only when the command succeeds; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivcat::cli
