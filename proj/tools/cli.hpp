#pragma once

#include <iosfwd>
#include <string>
#include <vector>

/// The `stringvac` command line, callable in-process for tests.
namespace stringvac::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kConfigError = 2,
  kNumericError = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stringvac::cli
