#pragma once

// Command implementations behind the `copoisson` executable.
//
// Exit codes: 0 all selected checks pass, 1 a check fails, 2 usage or bound
// error, 3 malformed input.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace copoisson {

enum class OutputFormat { json, text };

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitParse = 3 };

struct CommandResult {
  int exit_code = kExitPass;
  /// Report body for stdout.
  std::string output;
  /// Diagnostic for stderr.
  std::string error;
};

struct CheckRequest {
  std::string input_text;
  std::optional<std::size_t> max_degree;
  /// Empty selects the default checks for the input kind.
  std::vector<std::string> checks;
  OutputFormat format = OutputFormat::json;
};

struct TransformRequest {
  std::string input_text;
  /// One of q, i, p, j, copoisson, series.
  std::string to;
  OutputFormat format = OutputFormat::json;
};

/// Checks available for each input kind, in report order.
std::vector<std::string> available_checks(const std::string& kind, bool series_mode);

CommandResult cmd_check(const CheckRequest& req);
CommandResult cmd_transform(const TransformRequest& req);
/// structure is "poisson" or "copoisson".
CommandResult cmd_classify_h4(const std::string& structure, bool hopf, OutputFormat format);
CommandResult cmd_relations(long dim, OutputFormat format);

}  // namespace copoisson
