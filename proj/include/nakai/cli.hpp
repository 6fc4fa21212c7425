#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nakai::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRejected = 1,   ///< INPUT_REJECTED, or a certificate that fails verification
  kUsage = 2,      ///< bad flags, unparsable expression or certificate
  kExhausted = 3,  ///< RESOURCE_EXHAUSTED
  kInternal = 4,   ///< a theorem-backed assertion failed
};

/// Runs one invocation. `args` excludes the program name. Primary output goes
/// to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nakai::cli
