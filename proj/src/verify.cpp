#include "qsel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qsel/io.hpp"

namespace qsel {
namespace {

CheckResult skipped(std::string name, std::string why) {
  return {std::move(name), true, "skipped: " + std::move(why)};
}

CheckResult check_table_sanity(const BetaThresholdTable& tab) {
  CheckResult r{"table-sanity", true, ""};
  if (tab.beta[1] != 1.0 || tab.t[1] != 1.0 || tab.v[1] != 0.0) {
    return {r.name, false, "base row must be beta=1, t=1, v=0"};
  }
  for (int n = 2; n <= tab.n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (!(tab.t[i] > 0.0 && tab.t[i] < 1.0)) {
      return {r.name, false, "t[" + std::to_string(n) + "] outside (0,1)"};
    }
    if (!(tab.t[i] < tab.t[i - 1])) {
      return {r.name, false, "t not strictly decreasing at n=" + std::to_string(n)};
    }
    if (!(tab.beta[i] > tab.beta[i - 1])) {
      return {r.name, false, "beta not strictly increasing at n=" + std::to_string(n)};
    }
    if (!(tab.v[i] > tab.v[i - 1])) {
      return {r.name, false, "v not strictly increasing at n=" + std::to_string(n)};
    }
  }
  r.detail = "rows 1.." + std::to_string(tab.n_max);
  return r;
}

CheckResult check_theorem1_bounds(const BetaThresholdTable& tab) {
  CheckResult r{"theorem1-bounds", true, ""};
  if (tab.n_max < 2) return skipped(r.name, "needs n_max >= 2");
  double worst_lower = std::numeric_limits<double>::infinity();
  double worst_upper = std::numeric_limits<double>::infinity();
  int bad_n = 0;
  for (int n = 2; n <= tab.n_max; ++n) {
    const double beta = tab.beta[static_cast<std::size_t>(n)];
    const double nd = static_cast<double>(n);
    const double slack = 1e-9 * beta;
    const double lower_margin = beta - 0.5 * nd * nd;
    const double upper_margin = 0.5 * nd * nd + nd * std::log(nd) - beta;
    worst_lower = std::min(worst_lower, lower_margin);
    worst_upper = std::min(worst_upper, upper_margin);
    if (lower_margin < -slack || upper_margin < -slack) {
      bad_n = n;
      break;
    }
  }
  if (bad_n != 0) {
    return {r.name, false,
            "n^2/2 <= beta(n) <= n^2/2 + n ln n violated at n=" + std::to_string(bad_n)};
  }
  r.detail = "worst lower margin " + format_double(worst_lower) +
             ", worst upper margin " + format_double(worst_upper);
  return r;
}

CheckResult check_convexity(const BetaThresholdTable& tab) {
  CheckResult r{"convexity", true, ""};
  if (tab.n_max < 3) return skipped(r.name, "needs n_max >= 3");
  for (int n = 1; n + 1 <= tab.n_max - 1; ++n) {
    if (!(tab.delta[static_cast<std::size_t>(n)] <=
          tab.delta[static_cast<std::size_t>(n + 1)])) {
      return {r.name, false, "delta decreases at n=" + std::to_string(n)};
    }
  }
  r.detail = "delta nondecreasing over 1.." + std::to_string(tab.n_max - 1);
  return r;
}

CheckResult check_ghat_crosscheck(const BetaThresholdTable& tab,
                                  const SolverConfig& solver) {
  CheckResult r{"ghat-crosscheck", true, ""};
  double worst = 0.0;
  int points = 0;
  for (int n : {1, 10, 100, 1000}) {
    if (n > tab.n_max - 1) continue;
    ++points;
    const double direct = tab.delta[static_cast<std::size_t>(n)];
    const double via = delta_via_ghat(tab.beta[static_cast<std::size_t>(n)], solver);
    const double rel = std::abs(via - direct) / std::max(1.0, std::abs(direct));
    worst = std::max(worst, rel);
    if (rel > 1e-9) {
      return {r.name, false,
              "delta(" + std::to_string(n) + ") mismatch, rel err " + format_double(rel)};
    }
  }
  if (points == 0) return skipped(r.name, "needs n_max >= 2");
  r.detail = std::to_string(points) + " points, worst rel err " + format_double(worst);
  return r;
}

CheckResult check_h_residual(const BetaThresholdTable& tab,
                             const SolverConfig& solver) {
  CheckResult r{"h-residual", true, ""};
  if (tab.n_max < 2) return skipped(r.name, "needs n_max >= 2");
  double worst_ratio = 0.0;
  for (int n = 1; n < tab.n_max; ++n) {
    const double t = tab.t[static_cast<std::size_t>(n + 1)];
    const double x = tab.beta[static_cast<std::size_t>(n)];
    const double residual = std::log1p(-t) + t / (1.0 - t) - 1.0 / x;
    const double derivative = t / ((1.0 - t) * (1.0 - t));
    const double allowed = 10.0 * solver.root_tol * derivative;
    worst_ratio = std::max(worst_ratio, std::abs(residual) / allowed);
    if (std::abs(residual) > allowed) {
      return {r.name, false,
              "first-order-condition residual too large at n=" + std::to_string(n + 1)};
    }
  }
  r.detail = "worst residual at " + format_double(worst_ratio) + " of allowance";
  return r;
}

CheckResult check_h_sqrt_bound(const BetaThresholdTable& tab) {
  CheckResult r{"h-sqrt-bound", true, ""};
  if (tab.n_max < 2) return skipped(r.name, "needs n_max >= 2");
  for (int n = 1; n < tab.n_max; ++n) {
    const double t = tab.t[static_cast<std::size_t>(n + 1)];
    const double cap = std::sqrt(2.0 / tab.beta[static_cast<std::size_t>(n)]);
    if (!(t <= cap)) {
      return {r.name, false, "t exceeds sqrt(2/beta) at n=" + std::to_string(n + 1)};
    }
  }
  r.detail = "t[n+1] <= sqrt(2/beta[n]) over 1.." + std::to_string(tab.n_max - 1);
  return r;
}

CheckResult check_tn_asymptotic(const BetaThresholdTable& tab, TolProfile profile) {
  CheckResult r{"tn-asymptotic", true, ""};
  std::vector<int> points;
  for (int n : {100, 1000, 10000}) {
    if (n <= tab.n_max) points.push_back(n);
  }
  if (points.empty()) return skipped(r.name, "needs n_max >= 100");
  std::vector<double> gaps;
  for (int n : points) {
    gaps.push_back(std::abs(static_cast<double>(n) *
                                tab.t[static_cast<std::size_t>(n)] -
                            2.0));
  }
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    if (!(gaps[i] > gaps[i + 1])) {
      return {r.name, false, "|n t_n - 2| not strictly decreasing across scales"};
    }
  }
  const double band = profile == TolProfile::kStrict ? 0.005 : 0.01;
  if (points.back() == 10000 && gaps.back() > band) {
    return {r.name, false,
            "|n t_n - 2| = " + format_double(gaps.back()) + " at n=10000 exceeds " +
                format_double(band)};
  }
  r.detail = "gap at n=" + std::to_string(points.back()) + " is " +
             format_double(gaps.back());
  return r;
}

CheckResult check_variance_trend(const BetaThresholdTable& tab, int var_n,
                                 TolProfile profile) {
  CheckResult r{"variance-trend", true, ""};
  const int nv = std::min(var_n, tab.n_max);
  if (nv < 1000) return skipped(r.name, "needs n >= 1000 for the ratio band");
  const auto ratio = [&tab](int n) {
    const double nd = static_cast<double>(n);
    return 3.0 * tab.v[static_cast<std::size_t>(n)] / (nd * nd * nd);
  };
  const double lo = profile == TolProfile::kStrict ? 0.95 : 0.90;
  const double hi = profile == TolProfile::kStrict ? 1.05 : 1.10;
  const double band_ratio = ratio(nv);
  if (!(band_ratio >= lo && band_ratio <= hi)) {
    return {r.name, false,
            "3 v(n)/n^3 = " + format_double(band_ratio) + " at n=" + std::to_string(nv) +
                " outside [" + format_double(lo) + "," + format_double(hi) + "]"};
  }
  r.detail = "3 v(n)/n^3 = " + format_double(band_ratio) + " at n=" + std::to_string(nv);
  if (tab.n_max >= 10000) {
    if (!(std::abs(ratio(10000) - 1.0) < std::abs(ratio(100) - 1.0))) {
      return {r.name, false, "ratio does not tighten from n=100 to n=10000"};
    }
    r.detail += ", tightens from n=100 to n=10000";
  }
  return r;
}

CheckResult check_blocking_sweep(const BetaThresholdTable& tab) {
  CheckResult r{"blocking-sweep", true, ""};
  const int cap = std::min(100, tab.n_max);
  int pairs = 0;
  for (int m = 1; m <= cap; ++m) {
    for (int n = 1; m * n <= cap; ++n) {
      ++pairs;
      if (!check_blocking_inequality(m, n, tab)) {
        return {r.name, false,
                "beta(mn) > min(m^2 beta(n), n^2 beta(m)) at m=" + std::to_string(m) +
                    ", n=" + std::to_string(n)};
      }
    }
  }
  r.detail = std::to_string(pairs) + " (m,n) pairs with mn <= " + std::to_string(cap);
  return r;
}

CheckResult check_dual_upper_bound(const SizeFocusedValueGrid& grid) {
  CheckResult r{"dual-upper-bound", true, ""};
  const double slack = 2.0 / static_cast<double>(grid.grid_size);
  if (grid.ell[1] != 1.0) {
    return {r.name, false, "ell(1) = " + format_double(grid.ell[1]) + ", expected 1"};
  }
  if (grid.horizon >= 2 && std::abs(grid.ell[2] - 1.5) > 1e-3) {
    return {r.name, false, "ell(2) = " + format_double(grid.ell[2]) + ", expected 1.5"};
  }
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= grid.horizon; ++n) {
    const double cap = std::sqrt(2.0 * static_cast<double>(n)) + slack;
    worst_margin = std::min(worst_margin, cap - grid.ell[static_cast<std::size_t>(n)]);
    if (!(grid.ell[static_cast<std::size_t>(n)] <= cap)) {
      return {r.name, false, "ell(n) > sqrt(2n) + 2/grid at n=" + std::to_string(n)};
    }
  }
  r.detail = "ell(n) <= sqrt(2n) + 2/grid for n <= " + std::to_string(grid.horizon) +
             ", worst margin " + format_double(worst_margin);
  return r;
}

CheckResult check_chebyshev_vs_dp(const BetaThresholdTable& tab,
                                  const SizeFocusedValueGrid& grid) {
  CheckResult r{"chebyshev-vs-dp", true, ""};
  const double slack = 2e-4;
  int points = 0;
  std::string values;
  for (int n : {50, 100}) {
    if (n > grid.horizon) continue;
    ++points;
    const double lower = chebyshev_lower_bound(n, tab);
    const double ell = grid.ell[static_cast<std::size_t>(n)];
    if (!(lower > 0.0)) {
      return {r.name, false, "bound not positive at n=" + std::to_string(n)};
    }
    if (!(lower <= ell + slack)) {
      return {r.name, false,
              "bound " + format_double(lower) + " exceeds ell(n) = " + format_double(ell) +
                  " at n=" + std::to_string(n)};
    }
    values += (values.empty() ? "" : ", ") + std::to_string(n) + ": " +
              format_double(lower) + " <= " + format_double(ell);
  }
  if (points == 0) return skipped(r.name, "needs dp_horizon >= 50");
  r.detail = values;
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          const BetaThresholdTable& table,
                                          const SizeFocusedValueGrid& grid) {
  std::vector<CheckResult> results;
  results.push_back(check_table_sanity(table));
  results.push_back(check_theorem1_bounds(table));
  results.push_back(check_convexity(table));
  results.push_back(check_ghat_crosscheck(table, opts.solver));
  results.push_back(check_h_residual(table, opts.solver));
  results.push_back(check_h_sqrt_bound(table));
  results.push_back(check_tn_asymptotic(table, opts.profile));
  results.push_back(check_variance_trend(table, opts.var_n, opts.profile));
  results.push_back(check_blocking_sweep(table));
  results.push_back(check_dual_upper_bound(grid));
  results.push_back(check_chebyshev_vs_dp(table, grid));
  return results;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  const BetaThresholdTable table = build_tables(opts.n_max, opts.solver);
  const SizeFocusedValueGrid grid = size_focused_dp(opts.dp_horizon, opts.dp_grid);
  return run_verification(opts, table, grid);
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

void print_results(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
  }
}

}  // namespace qsel
