#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fockbridge_cli/config.hpp"
#include "fockbridge_cli/report.hpp"

namespace fockbridge::cli {

struct CheckOutcome {
  double deviation = 0.0;
  std::string skip_reason;  // non-empty: empty assertion domain

  static CheckOutcome skipped(std::string why) { return {0.0, std::move(why)}; }
};

struct CheckDefinition {
  std::string group;  // selector it belongs to
  std::string name;
  std::string anchor;
  double tolerance = 0.0;
  std::function<CheckOutcome()> run;
};

/// algebra, fock, fields, equivalence, statistics, classical, nw, lorentz, antiparticles, all
const std::vector<std::string>& selectors();

/// Checks for the selector, in report order, with tolerance overrides applied.
/// Throws ConfigError for an unknown selector or an override naming no check.
std::vector<CheckDefinition> build_checks(const RunConfig& config, const std::string& selector);

/// Runs checks concurrently; the result order is the definition order.
std::vector<CheckReport> run_checks(const std::vector<CheckDefinition>& checks, bool timings);

std::vector<CheckReport> run_suite(const RunConfig& config, const std::string& selector, bool timings = false);

}  // namespace fockbridge::cli
