#pragma once

#include <iosfwd>

namespace lamglass::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageOrIo = 1,
  kValidation = 2,
  kSingular = 3,
  kToleranceFailure = 4,
};

/// Entry point of the `lamglass` tool: `solve`, `bench` and `converge`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lamglass::cli
