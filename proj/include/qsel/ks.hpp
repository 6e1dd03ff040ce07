#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qsel {

// Two-sample Kolmogorov-Smirnov statistic, sup |F_a - F_b| over the pooled
// sample. Tie-aware merge walk, which matters here because completion times
// are integers. Inputs are copied and sorted.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double step_a = 1.0 / static_cast<double>(a.size());
  const double step_b = 1.0 / static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double diff = 0.0, max_diff = 0.0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] < b[ib]) {
      diff -= step_a;
      ++ia;
    } else if (a[ia] > b[ib]) {
      diff += step_b;
      ++ib;
    } else {
      const double x = a[ia];
      while (ia < a.size() && a[ia] == x) {
        diff -= step_a;
        ++ia;
      }
      while (ib < b.size() && b[ib] == x) {
        diff += step_b;
        ++ib;
      }
    }
    max_diff = std::max(max_diff, std::abs(diff));
  }
  return max_diff;
}

// Asymptotic two-sided p-value: Q(z) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 z^2)
// with z = D sqrt(na nb / (na + nb)).
inline double ks_pvalue(double statistic, std::size_t na, std::size_t nb) {
  const double ena = static_cast<double>(na);
  const double enb = static_cast<double>(nb);
  const double z = statistic * std::sqrt(ena * enb / (ena + enb));
  if (z < 1e-8) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * static_cast<double>(k) *
                                 static_cast<double>(k) * z * z);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

inline KsResult two_sample_ks(const std::vector<double>& a,
                              const std::vector<double>& b) {
  KsResult r;
  r.statistic = ks_statistic(a, b);
  r.p_value = ks_pvalue(r.statistic, a.size(), b.size());
  return r;
}

}  // namespace qsel
