#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qsel/dual.hpp"
#include "qsel/tables.hpp"

namespace qsel {

enum class TolProfile { kDefault, kStrict };

struct VerifyOptions {
  int n_max = 10000;
  int var_n = 5000;      // where the variance-ratio band is evaluated
  int dp_grid = 10000;   // size-focused DP discretization
  int dp_horizon = 100;  // size-focused DP horizon
  TolProfile profile = TolProfile::kDefault;
  SolverConfig solver{};
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the whole deterministic check suite against a prebuilt table and DP
// grid. The table is taken as given, which lets tests feed in a corrupted
// one; checks that need data beyond the table's range report a pass with a
// "skipped" detail.
std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          const BetaThresholdTable& table,
                                          const SizeFocusedValueGrid& grid);

// Convenience overload that builds the table and grid from opts.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

// One "PASS name: detail" / "FAIL name: detail" line per check.
void print_results(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace qsel
