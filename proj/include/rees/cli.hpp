#pragma once

#include <ostream>

namespace rees::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kDeadline = 3 };

// Entry point behind the rees executable. Writes results to out and
// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rees::cli
