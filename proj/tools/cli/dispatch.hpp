#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace schurbound::cli {

/// Exit codes: 0 bound/certificate computed and verified, 1 hypothesis not
/// met or verification failed, 2 input or usage error.
enum ExitCode : int { kVerified = 0, kNotVerified = 1, kUsageError = 2 };

struct DispatchResult {
  int exit_code = kUsageError;
  ReportDocument report;
  /// False for --help / --version and for argument errors caught before a
  /// subcommand ran; nothing should be emitted in that case.
  bool has_report = false;
  /// Value of --json; empty means stdout.
  std::string json_path;
};

/// Runs one command line (without the program name). Help and argument
/// errors are written to `err`.
DispatchResult dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// dispatch() plus report emission to --json or `out`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurbound::cli
