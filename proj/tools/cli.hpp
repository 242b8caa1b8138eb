#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphfano::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kBudgetExceeded = 3,
  kDisagreement = 4,
  kNoWitness = 5,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphfano::cli
