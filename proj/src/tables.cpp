#include "qsel/tables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsel {

double exact_variance_step(double t, double m_prev, double v_prev) {
  if (!(t > 0.0) || t > 1.0) {
    throw std::domain_error("exact_variance_step: t must lie in (0,1], got " +
                            std::to_string(t));
  }
  if (t == 1.0) {
    // E[R^2] diverges; only legal when there is no residual problem at all.
    if (m_prev > 0.0 || v_prev > 0.0) {
      throw std::domain_error(
          "exact_variance_step: t = 1 with a nontrivial residual problem");
    }
    return 0.0;
  }
  const double var_gamma = 1.0 / (t * t) - 1.0 / t;
  const double mean_r = -std::log1p(-t) / t;
  const double mean_r_sq = 1.0 / (1.0 - t);
  return var_gamma + mean_r_sq * (v_prev + m_prev * m_prev) -
         (mean_r * m_prev) * (mean_r * m_prev);
}

BetaThresholdTable build_tables(int n_max, const SolverConfig& cfg) {
  if (n_max < 1) {
    throw std::invalid_argument("build_tables: n_max must be >= 1, got " +
                                std::to_string(n_max));
  }
  cfg.validate();

  BetaThresholdTable table;
  table.n_max = n_max;
  table.beta.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  table.t.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  table.v.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  table.delta.assign(static_cast<std::size_t>(n_max), 0.0);

  table.beta[1] = 1.0;
  table.t[1] = 1.0;
  table.v[1] = 0.0;
  for (int n = 1; n < n_max; ++n) {
    const double tn1 = solve_H(table.beta[n], cfg);
    table.t[n + 1] = tn1;
    table.beta[n + 1] = g_value(table.beta[n], tn1);
    table.v[n + 1] = exact_variance_step(tn1, table.beta[n], table.v[n]);
    table.delta[n] = table.beta[n + 1] - table.beta[n];
  }
  return table;
}

}  // namespace qsel
