// Subcommands of the `compas` tool. Each returns a process exit code and never
// throws; diagnostics go to `err`.
//
// Exit codes:
//   0  success
//   1  I/O failure (unreadable input, unwritable output)
//   2  invalid input: parse errors (with line numbers), bad arguments
//   3  rhythms with different cycle lengths
//   4  exhaustive enumeration budget exceeded
//   5  selfcheck found a mismatch

#pragma once

#include <iosfwd>

#include "compas/cli/run_config.h"

namespace compas::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitInvalidInput = 2,
  kExitLengthMismatch = 3,
  kExitBudget = 4,
  kExitSelfcheckFailed = 5,
};

int cmd_distances(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_regularity(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_segment(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_tree(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_plot(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_selfcheck(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace compas::cli
