#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace frobcalc::cli {

inline constexpr const char* kSchemaVersion = "frobcalc.report/1";

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kPrecisionOrCapError = 2,
  kParseError = 3,
  /// A guaranteed certificate or self-check failed.
  kInternalError = 4,
};

struct Outcome {
  nlohmann::json report;
  int exit_code = kOk;
  /// Human-readable message for stderr; empty on success.
  std::string diagnostic;
};

const std::vector<std::string>& subcommands();

/// The request with every default filled in, including the effective
/// Laurent precision. Running the normalized request again reproduces the
/// same report.
nlohmann::json normalize_request(const nlohmann::json& request);

/// Dispatches a request {"command": ..., ...}. Never throws: errors become
/// an error report with the matching exit code.
Outcome run(const nlohmann::json& request);

/// A report or a bare request; for a report, its echoed request.
nlohmann::json extract_request(const nlohmann::json& document);

/// Two-space-indented JSON followed by a newline.
std::string render(const nlohmann::json& report);

}  // namespace frobcalc::cli
