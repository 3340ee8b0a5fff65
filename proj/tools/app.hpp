#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace addbase::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kPrecondition = 2,
  kViolation = 3,
};

/// Runs one command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addbase::cli
