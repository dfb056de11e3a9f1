#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blockdet::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,         // parse, dimension or argument errors
  kSingularPivot = 2,      // block engine hit a singular pivot without fallback
  kToleranceExceeded = 3,  // compare / njl checks failed
};

/// Entry point shared by the executable and the tests. argv[0] is the program
/// name. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockdet::cli
