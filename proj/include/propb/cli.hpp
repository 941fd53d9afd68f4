#pragma once

#include <iosfwd>

namespace propb {

/// Exit codes of the propb command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,       // bad arguments, unreadable files, other errors
    kExitParseError = 2,    // input hypergraph file rejected
    kExitBudget = 3,        // enumeration budget exceeded (or undetermined with --strict)
    kExitCounterexample = 4 // verify found a counterexample / fixture failed
};

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace propb
