#pragma once

#include <iosfwd>

namespace eulerian::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kRefused = 3,
};

/// Runs one command line. Results go to `out`, diagnostics to `err`.
/// The default output format is read from EULERIAN_FORGE_FORMAT when the
/// command line does not pass --format.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulerian::cli
