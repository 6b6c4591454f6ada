#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symgrowth {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitInvalidInput = 2,
    kExitBudgetExceeded = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out` (or the --out file); errors go to `err` as one JSON object per line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symgrowth
