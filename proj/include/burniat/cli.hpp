#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace burniat {

enum ExitCode : int { kExitOk = 0, kExitMalformed = 1, kExitInconclusive = 2, kExitFailed = 3 };

struct RunConfig {
  /// verify, search, ext-table, report, dp-check, prove, derive-change
  std::string subcommand;
  std::string collection_path;
  std::string numerical_path;
  /// table2-upsilon, table2-upsilon-prime or sigma-delpezzo.
  std::string builtin;
  /// Overrides the block sizes of the loaded collection.
  std::optional<std::vector<int>> blocks;
  /// Class for `prove`: a JSON object or an expression such as "K-(R5-R6)".
  std::string divisor;
  int depth = 10;
  bool trace = false;
  /// json, csv or text; empty picks the subcommand default.
  std::string format;
  unsigned parallelism = 1;
};

/// Runs one subcommand, writing results to `out` and diagnostics to `err`.
/// Output is deterministic for a fixed config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace burniat
