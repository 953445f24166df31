#pragma once

#include <iosfwd>

namespace chevorbit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitBadInput = 2,
  kExitUnsupported = 3,
  kExitBudget = 4,
};

/// Entry point of `chevorbit`; output goes to `out` unless --out names a file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chevorbit
