#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace legspec::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCapabilityError = 2,
  kHypothesisNotMet = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legspec::cli
