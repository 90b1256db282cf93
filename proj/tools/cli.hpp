#pragma once

#include <ostream>

namespace coxinv::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalid = 2,
  kMismatch = 3,
  kLimit = 4,
};

/// Entry point behind the `coxinv` executable. Data goes to `out` (or the
/// --out file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace coxinv::cli
