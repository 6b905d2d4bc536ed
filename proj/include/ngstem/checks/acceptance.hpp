#pragma once

#include <string>
#include <vector>

#include "ngstem/fixtures.hpp"

namespace ngstem::checks {

struct CheckResult {
  std::string id;    // "1", "2", ..., "5a"
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the reproduction and property checks against `fixtures`. Output
/// carries no timings, so identical fixtures give identical results.
std::vector<CheckResult> run_acceptance(const FixtureSet& fixtures);

/// One "PASS|FAIL <id> <name>: <detail>" line per check plus a summary line.
std::string format_checks(const std::vector<CheckResult>& checks);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace ngstem::checks
