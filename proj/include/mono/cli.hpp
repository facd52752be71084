#pragma once

#include <iosfwd>

namespace mono {

/// Exit codes returned by run().
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitExtendTable = 3,
};

/// Subcommands: build, eval, density, verify, counterexample, family.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mono
