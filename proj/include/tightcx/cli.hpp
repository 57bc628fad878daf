#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tightcx::cli {

enum ExitCode : int {
    kComputed = 0,
    kViolated = 1,
    kInputError = 2,
    kBudgetExhausted = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tightcx::cli
