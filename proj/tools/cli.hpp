#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qfinetti/definetti.hpp"

namespace qfinetti::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (args[0] is the program name) writing normal
/// output to `out` and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV header of `sweep`.
inline constexpr const char* kSweepHeader = "n,k,n1,q,distance,upper,lower,dist_over_qn";

/// Writes the header, one row per report and one VIOLATION row per failing
/// report. Returns true when every report passes.
bool write_sweep_csv(const std::vector<DistanceReport>& reports, std::ostream& out);

}  // namespace qfinetti::cli
