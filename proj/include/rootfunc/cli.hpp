#pragma once

#include <iosfwd>

namespace rootfunc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInfeasible = 2,
  kUndecided = 3,
};

/// Runs one command line. Results go to `out`, diagnostics to `err`.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rootfunc::cli
