#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace earkit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerifiedFailure = 1,
  kInputError = 2,
  kGuardRefusal = 3,
};

/// Runs one command line (without the program name). Human-readable output
/// goes to `out`, diagnostics to `err`; `--json <path>` also writes the full
/// run report.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace earkit::cli
