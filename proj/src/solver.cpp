#include "qsel/solver.hpp"

#include <cmath>
#include <string>

namespace qsel {
namespace {

// First-order condition for the minimizer of t -> g(x,t):
//   phi(t) = log(1-t) + t/(1-t) - 1/x,
// strictly increasing on (0,1) with phi(0+) = -1/x < 0 and phi(1-) = +inf.
double phi(double t, double x) {
  return std::log1p(-t) + t / (1.0 - t) - 1.0 / x;
}

// phi'(t) = t / (1-t)^2
double phi_prime(double t) {
  const double one_minus = 1.0 - t;
  return t / (one_minus * one_minus);
}

}  // namespace

void SolverConfig::validate() const {
  if (!(root_tol > 0.0) || !(root_tol < 1e-6)) {
    throw std::invalid_argument("SolverConfig: root_tol must be in (0, 1e-6), got " +
                                std::to_string(root_tol));
  }
  if (max_iter < 64) {
    throw std::invalid_argument("SolverConfig: max_iter must be >= 64, got " +
                                std::to_string(max_iter));
  }
}

double g_value(double x, double t) {
  if (!(t > 0.0) || !(t < 1.0)) {
    throw std::domain_error("g_value: t must lie in (0,1), got " + std::to_string(t));
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("g_value: x must be >= 0, got " + std::to_string(x));
  }
  // -log1p(-t) = log(1/(1-t)) without cancellation for small t
  return (1.0 + x * (-std::log1p(-t))) / t;
}

double ghat_value(double x, double t) { return g_value(x, t) - x; }

double solve_H(double x, const SolverConfig& cfg) {
  cfg.validate();
  if (!(x >= 1.0)) {
    throw std::domain_error("solve_H: x must be >= 1, got " + std::to_string(x));
  }

  constexpr double kEps = 1e-15;
  double lo = kEps;        // phi(lo) < 0 for any x within double resolution
  double hi = 1.0 - kEps;  // phi(hi) > 0
  if (phi(lo, x) >= 0.0) {
    throw std::domain_error("solve_H: root below t resolution for x = " +
                            std::to_string(x));
  }
  int iterations = 0;

  // Bisect until the bracket is narrow enough for Newton to be safe.
  constexpr double kNewtonBracket = 1e-6;
  while (hi - lo > kNewtonBracket) {
    if (++iterations > cfg.max_iter) {
      throw SolverError("solve_H: bisection exceeded max_iter=" +
                        std::to_string(cfg.max_iter));
    }
    const double mid = 0.5 * (lo + hi);
    if (phi(mid, x) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // Newton from the bracket midpoint, kept inside [lo, hi]; monotonicity of
  // phi keeps the bracket valid after each step.
  double t = 0.5 * (lo + hi);
  while (true) {
    if (++iterations > cfg.max_iter) {
      throw SolverError("solve_H: Newton refinement exceeded max_iter=" +
                        std::to_string(cfg.max_iter));
    }
    const double f = phi(t, x);
    if (f == 0.0) return t;
    if (f < 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    double step = -f / phi_prime(t);
    double next = t + step;
    if (!(next > lo) || !(next < hi)) {  // fall back to bisection
      next = 0.5 * (lo + hi);
      step = next - t;
    }
    t = next;
    if (std::abs(step) <= cfg.root_tol || hi - lo <= cfg.root_tol) return t;
  }
}

double G_value(double x, const SolverConfig& cfg) {
  return g_value(x, solve_H(x, cfg));
}

double delta_via_ghat(double beta_n, const SolverConfig& cfg) {
  return ghat_value(beta_n, solve_H(beta_n, cfg));
}

}  // namespace qsel
