#pragma once

#include <stdexcept>

namespace qsel {

// Tolerances and caps for the scalar root solve behind the threshold
// recursion. root_tol is an absolute tolerance on t.
struct SolverConfig {
  double root_tol = 1e-12;
  int max_iter = 256;

  // Throws std::invalid_argument unless 0 < root_tol < 1e-6 and max_iter >= 64.
  void validate() const;
};

// Raised when the root solve exhausts its iteration cap; signals a
// misconfigured tolerance rather than a property of the problem.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One-step expected cost of accepting on a window fraction t in (0,1) when
// the remaining problem is worth x:
//   g(x,t) = 1/t + (x/t) log(1/(1-t)),
// evaluated as (1/t)(1 + x * -log1p(-t)) to stay accurate as t -> 0.
// Throws std::domain_error unless 0 < t < 1 and x >= 0.
double g_value(double x, double t);

// Increment form of the same cost: ghat(x,t) = g(x,t) - x.
double ghat_value(double x, double t);

// Unique root t* in (0,1) of  log(1-t) + t/(1-t) = 1/x  for x >= 1. The
// left-hand side is strictly increasing in t, so a bisection bracket always
// converges; Newton polishes the final digits once the bracket is below 1e-6.
// Satisfies t* <= sqrt(2/x).
double solve_H(double x, const SolverConfig& cfg = {});

// G(x) = min over t in (0,1) of g(x,t) = g(x, solve_H(x)), for x >= 1.
double G_value(double x, const SolverConfig& cfg = {});

// min over t of ghat(x,t); shares its minimizer with g, so this equals
// g(x, solve_H(x)) - x. At x = beta(n) this is the increment
// beta(n+1) - beta(n), which is how the table convexity is cross-checked.
double delta_via_ghat(double beta_n, const SolverConfig& cfg = {});

}  // namespace qsel
