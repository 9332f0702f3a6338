#pragma once

#include <iosfwd>

namespace runbits {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs one command-line invocation, writing to the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace runbits
