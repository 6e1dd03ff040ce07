#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

namespace qsel {

// Mergeable moment accumulator (Welford updates, Chan et al. pairwise merge).
// Merging is associative up to floating-point reassociation; callers that
// need bit-reproducible results must merge in a canonical order.
class SimulationSummary {
 public:
  void push(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
    if (x < min_) min_ = x;
    if (x > max_) max_ = x;
  }

  void merge(const SimulationSummary& other) {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double delta = other.mean_ - mean_;
    mean_ += delta * nb / (na + nb);
    m2_ += other.m2_ + delta * delta * na * nb / (na + nb);
    count_ += other.count_;
    if (other.min_ < min_) min_ = other.min_;
    if (other.max_ > max_) max_ = other.max_;
  }

  static SimulationSummary from_samples(std::span<const double> samples) {
    SimulationSummary s;
    for (double x : samples) s.push(x);
    return s;
  }

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }

  // Unbiased sample variance; 0 until two samples exist.
  double variance() const {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }

  double std_error() const {
    return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_))
                      : 0.0;
  }

  double min() const { return min_; }
  double max() const { return max_; }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = std::numeric_limits<double>::infinity();
  double max_ = -std::numeric_limits<double>::infinity();
};

// Standard error of the unbiased sample variance, estimated from the sample
// itself: Var(s^2) ~= (m4 - s^4 (N-3)/(N-1)) / N with m4 the fourth central
// moment. Needs the raw samples, so it lives outside the accumulator.
inline double variance_standard_error(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 4) return std::numeric_limits<double>::infinity();
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(n);
  double m2 = 0.0, m4 = 0.0;
  for (double x : samples) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
  }
  m4 /= static_cast<double>(n);
  const double s2 = m2 / static_cast<double>(n - 1);
  const double nd = static_cast<double>(n);
  const double var_of_var = (m4 - s2 * s2 * (nd - 3.0) / (nd - 1.0)) / nd;
  return var_of_var > 0.0 ? std::sqrt(var_of_var) : 0.0;
}

}  // namespace qsel
