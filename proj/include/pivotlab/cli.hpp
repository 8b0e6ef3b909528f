#pragma once

#include <iosfwd>

namespace pivotlab {

// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitBudget = 3, kExitMismatch = 4 };

// Runs the command line; reports go to `out` (or the --out file), warnings
// and error objects to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pivotlab
