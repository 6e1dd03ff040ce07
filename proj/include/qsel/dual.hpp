#pragma once

#include <cstdint>
#include <vector>

#include "qsel/policy_sim.hpp"
#include "qsel/summary.hpp"
#include "qsel/tables.hpp"

namespace qsel {

// Blocking suboptimal policy: partition [0,1] into m value blocks, run the
// optimal n-policy inside each block in order.
struct BlockingConfig {
  int m = 1;
  int n = 1;
  std::uint64_t replications = 1;
  std::uint64_t seed = 42;
};

// Total observations consumed to make all m*n selections, summarized over
// cfg.replications. Mean estimates m^2 beta(n).
SimulationSummary simulate_blocking(const BlockingConfig& cfg,
                                    const BetaThresholdTable& table);

// Discretized value function of the size-focused dual problem: with i
// observations remaining and last accepted value x, u_i(x) is the expected
// number of further selections under the optimal policy. values[i][j] holds
// u_i at grid point j; ell[i] = u_i(0) is 1-based (index 0 unused).
struct SizeFocusedValueGrid {
  int grid_size = 0;
  int horizon = 0;
  std::vector<std::vector<double>> values;
  std::vector<double> ell;
};

// Backward recursion u_i(x) = x u_{i-1}(x) + int_x^1 max(1 + u_{i-1}(y),
// u_{i-1}(x)) dy on an equispaced grid, trapezoid integration. The kernel
// splits the integrand at the accept/reject crossover and reuses suffix
// integrals, O(G log G) per step, OpenMP-parallel over grid points.
SizeFocusedValueGrid size_focused_dp(int horizon, int grid_size);

// Direct O(G^2)-per-step reference of the same trapezoid rule; kept for
// testing the kernel and for the benchmark. Use small grids only.
SizeFocusedValueGrid size_focused_dp_serial(int horizon, int grid_size);

// Simulates the greedy policy induced by the grid (accept y > x with i
// observations left iff 1 + u_{i-1}(y) >= u_{i-1}(x), nearest-point lookup)
// and summarizes the selected count over cfg.replications.
SimulationSummary simulate_size_focused(int horizon,
                                        const SizeFocusedValueGrid& grid,
                                        const StreamConfig& cfg);

// Lower bound on ell(n) from running the r-target time-focused policy and
// stopping at n observations: max over feasible r of
// r (1 - v(r)/(n - beta(r))^2), clamped at 0. Returns 0 when no r with
// beta(r) < n exists.
double chebyshev_lower_bound(int n, const BetaThresholdTable& table);

// True iff beta(m n) <= min(m^2 beta(n), n^2 beta(m)) up to 1e-9 relative
// slack. Throws std::out_of_range if m*n exceeds the table.
bool check_blocking_inequality(int m, int n, const BetaThresholdTable& table);

}  // namespace qsel
