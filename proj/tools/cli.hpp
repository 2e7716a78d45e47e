#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgain::cli {

enum ExitCode : int {
  kOk = 0,
  kNotConverged = 1,
  kFailure = 2,
};

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, summaries and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgain::cli
