#pragma once

#include <vector>

#include "qsel/solver.hpp"

namespace qsel {

// Exact per-n values of the optimal threshold policy. All arrays are
// 1-based (index 0 is unused) so they read like the recursions they store:
//   beta[1] = 1, t[1] = 1, v[1] = 0,
//   t[n+1]    = solve_H(beta[n]),
//   beta[n+1] = g(beta[n], t[n+1]),
//   v[n+1]    = exact_variance_step(t[n+1], beta[n], v[n]),
//   delta[n]  = beta[n+1] - beta[n]            (valid for 1 <= n < n_max).
// A completed table is immutable and safe to share across threads.
struct BetaThresholdTable {
  int n_max = 0;
  std::vector<double> beta;   // expected observations under the optimal policy
  std::vector<double> t;      // optimal threshold fractions, in (0,1] and decreasing
  std::vector<double> v;      // exact variance of the completion time
  std::vector<double> delta;  // increments beta[n+1]-beta[n], nondecreasing
};

// One step of the exact variance recursion. With t the threshold used for
// the first selection of an n-problem, m_prev = beta(n-1), v_prev = v(n-1):
//
//   v(n) = Var(geometric(t)) + E[R^2] (v_prev + m_prev^2) - (E[R] m_prev)^2
//
// where R = 1/(1 - U) for U uniform on [0,t], so E[R] = -log(1-t)/t and
// E[R^2] = 1/(1-t), and Var(geometric(t)) = 1/t^2 - 1/t.
// Throws std::domain_error for t = 1 with m_prev > 0 (E[R^2] diverges) and
// for t outside (0,1].
double exact_variance_step(double t, double m_prev, double v_prev);

// Builds the table up to n_max (>= 1). Sequential by construction: each row
// depends on the previous one. Cost is n_max root solves.
BetaThresholdTable build_tables(int n_max, const SolverConfig& cfg = {});

}  // namespace qsel
