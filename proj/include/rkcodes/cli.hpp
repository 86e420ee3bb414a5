#pragma once

#include <ostream>

namespace rkcodes {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitInputError = 2,
  kExitGuard = 3,
};

/// Entry point of the rkcodes command-line tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rkcodes
