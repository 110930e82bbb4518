#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kraus::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kDomainError = 2,
  kIoError = 3,
  kParseError = 4,
};

/// Entry point shared by the krausim binary and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kraus::cli
