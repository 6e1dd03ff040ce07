#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qsel/solver.hpp"

namespace {

// Independent root oracle: plain bisection on the first-order condition,
// written with std::log so it does not share the library's evaluation path.
double bisect_threshold_oracle(double x) {
  double lo = 1e-12, hi = 1.0 - 1e-12;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double value = std::log(1.0 - mid) + mid / (1.0 - mid) - 1.0 / x;
    (value < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("g_value closed-form points") {
  // x = 0 kills the log term
  CHECK(qsel::g_value(0.0, 0.5) == 2.0);
  // direct substitution: 2 + 2 ln 2
  CHECK(qsel::g_value(1.0, 0.5) ==
        doctest::Approx(2.0 + 2.0 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("g_value rejects out-of-domain arguments") {
  CHECK_THROWS_AS(qsel::g_value(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(qsel::g_value(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(qsel::g_value(1.0, -0.25), std::domain_error);
  CHECK_THROWS_AS(qsel::g_value(1.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(qsel::g_value(-1.0, 0.5), std::domain_error);
}

TEST_CASE("solve_H matches the independent bisection oracle") {
  CHECK(qsel::solve_H(1.0) == doctest::Approx(0.6821555671006273).epsilon(1e-12));
  for (double x : {1.0, 2.0, 17.5, 1000.0, 1e4}) {
    CAPTURE(x);
    CHECK(std::abs(qsel::solve_H(x) - bisect_threshold_oracle(x)) < 1e-10);
  }
}

TEST_CASE("solve_H stays below sqrt(2/x)") {
  for (double x : {1.0, 10.0, 100.0, 10000.0}) {
    CAPTURE(x);
    CHECK(qsel::solve_H(x) <= std::sqrt(2.0 / x));
  }
}

TEST_CASE("solve_H approaches sqrt(2/x) for large x") {
  const double t = qsel::solve_H(1e4);
  CHECK(std::abs(t / std::sqrt(2e-4) - 1.0) < 0.02);
}

TEST_CASE("G_value at x = 1 lands in the known bracket") {
  const double g1 = qsel::G_value(1.0);
  CHECK(g1 > 3.14);
  CHECK(g1 < 3.15);
  CHECK(g1 == doctest::Approx(3.1461932206205826).epsilon(1e-12));
}

TEST_CASE("G_value is the minimum of g over t") {
  std::mt19937_64 engine(7);
  std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
  for (double x : {1.0, 5.0, 50.0}) {
    const double minimum = qsel::G_value(x);
    for (int i = 0; i < 1000; ++i) {
      const double t = unit(engine);
      CAPTURE(x);
      CAPTURE(t);
      CHECK(minimum <= qsel::g_value(x, t) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("G_value matches its large-x expansion") {
  const double ratio = qsel::G_value(1e4) / ((100.0 + 1.0 / std::sqrt(2.0)) *
                                             (100.0 + 1.0 / std::sqrt(2.0)));
  CHECK(std::abs(ratio - 1.0) < 0.01);
}

TEST_CASE("delta_via_ghat at the base point") {
  const double d1 = qsel::delta_via_ghat(1.0);
  CHECK(d1 > 2.14);
  CHECK(d1 < 2.15);
}

TEST_CASE("SolverConfig validation") {
  qsel::SolverConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  cfg.root_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.root_tol = 1e-6;  // boundary excluded
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.root_tol = 1e-12;
  cfg.max_iter = 63;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("solve_H rejects x below 1 and misconfigured tolerances") {
  CHECK_THROWS_AS(qsel::solve_H(0.5), std::domain_error);

  // an absurdly small tolerance cannot be certified within the iteration cap
  qsel::SolverConfig cfg;
  cfg.root_tol = 1e-300;
  cfg.max_iter = 64;
  CHECK_THROWS_AS(qsel::solve_H(2.0, cfg), qsel::SolverError);
}
