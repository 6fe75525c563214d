#pragma once

#include <iosfwd>

namespace escape::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kPlanningFailed = 3,
  kIoError = 4,
  kValidationFailed = 5,
};

/// Entry point shared by the executable and the tests. Writes the summary
/// line to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace escape::cli
