#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vnum::cli {

/// Exit codes.
enum : int {
  kOk = 0,
  kLawFailed = 1,
  kInputError = 2,
  kInconclusive = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vnum::cli
