#pragma once

#include <ostream>

namespace sgcolor::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kResource = 3,
  kMismatch = 4,
};

// Entry point for the sgcolor tool; all output goes to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgcolor::cli
