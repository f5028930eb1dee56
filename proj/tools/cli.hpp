#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gradual::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFrontendError = 2,
  kIncompleteTypes = 3,
  kTypeError = 4,
  kRuntimeError = 5,
};

/// Runs the command line `args` (without the program name), writing program
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradual::cli
