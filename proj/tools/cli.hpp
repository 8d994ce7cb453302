#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sombor::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,   // a required (unique or corrected) closed form disagreed with the oracle
  kUsage = 2,
  kOffFamily = 3,  // closed form requested for a ring outside every family
  kIoError = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sombor::cli
