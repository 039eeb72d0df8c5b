#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fockbridge::cli {

enum class CheckStatus { Pass, Fail, Skipped, Error };

std::string_view to_string(CheckStatus s);

struct CheckReport {
  std::string name;
  std::string anchor;  // identity being checked
  std::optional<double> deviation;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Skipped;
  std::optional<double> seconds;
  std::string reason;  // skipped / error only
  bool capacity_exceeded = false;  // not serialized; selects exit code 3

  /// pass <=> deviation <= tolerance; null when skipped or errored.
  std::optional<bool> pass() const;
};

/// JSON array of {name, anchor, deviation, tolerance, pass, seconds, status[, reason]}.
std::string report_json(const std::vector<CheckReport>& reports);

/// One line per check plus a totals line.
std::string report_summary(const std::vector<CheckReport>& reports);

/// 0 all non-skipped checks pass, 3 any capacity rejection, else 1 on failure or error.
int exit_status(const std::vector<CheckReport>& reports);

/// Writes text to dir/name, creating dir. Throws std::runtime_error naming the path.
void write_file(const std::string& dir, const std::string& name, const std::string& text);

}  // namespace fockbridge::cli
