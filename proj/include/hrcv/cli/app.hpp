#pragma once

#include <iosfwd>

namespace hrcv::cli {

enum ExitCode : int {
  kOk = 0,               // SAFE, all hazards confirmed, oracle agrees
  kCounterexample = 1,   // verify found a violation; oracle disagrees
  kError = 2,            // bad input or usage
  kUnconfirmed = 3,      // classify found POSSIBLE or SPURIOUS hazards
};

/// The `hrcv` command line: verify, classify, export, oracle. Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hrcv::cli
