#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qsel/solver.hpp"
#include "qsel/tables.hpp"

namespace {

// Spot values computed independently with a 40-digit bisection recursion;
// the table must reproduce them to well under the 1e-9 acceptance slack.
struct SpotValue {
  int n;
  double beta;
  double t;
  double v;
};
constexpr SpotValue kSpotValues[] = {
    {2, 3.14619322062058259, 0.682155567100627316, 1.0059891527678268},
    {3, 6.36117662191641975, 0.505407032752262292, 4.77678286172115855},
    {5, 15.9224832126978292, 0.332792704040384035, 28.0365121749704346},
    {10, 57.7863564181059173, 0.180175730216549113, 266.971646111972615},
    {20, 217.589448468318079, 0.0943284476455374194, 2346.80822297683894},
    {50, 1301.00797491264552, 0.0389509720936073602, 39159.1664954655076},
    {100, 5113.0329862855032, 0.0197123952606769132, 321626.526786962308},
};

}  // namespace

TEST_CASE("build_tables base case") {
  const qsel::BetaThresholdTable table = qsel::build_tables(1);
  CHECK(table.n_max == 1);
  CHECK(table.beta[1] == 1.0);
  CHECK(table.t[1] == 1.0);
  CHECK(table.v[1] == 0.0);
  CHECK(table.delta.size() == 1);  // slot 0 only, no increments yet
}

TEST_CASE("build_tables rejects nonpositive n_max") {
  CHECK_THROWS_AS(qsel::build_tables(0), std::invalid_argument);
  CHECK_THROWS_AS(qsel::build_tables(-5), std::invalid_argument);
}

TEST_CASE("table reproduces independently computed spot values") {
  const qsel::BetaThresholdTable table = qsel::build_tables(100);
  for (const SpotValue& s : kSpotValues) {
    CAPTURE(s.n);
    CHECK(table.beta[static_cast<std::size_t>(s.n)] ==
          doctest::Approx(s.beta).epsilon(1e-11));
    CHECK(std::abs(table.t[static_cast<std::size_t>(s.n)] - s.t) < 1e-10);
    CHECK(table.v[static_cast<std::size_t>(s.n)] ==
          doctest::Approx(s.v).epsilon(1e-10));
  }
  CHECK(table.beta[2] > 3.14);
  CHECK(table.beta[2] < 3.15);
}

TEST_CASE("table satisfies the n^2/2 envelope and monotonicity invariants") {
  const qsel::BetaThresholdTable table = qsel::build_tables(100);
  for (int n = 2; n <= 100; ++n) {
    const double beta = table.beta[static_cast<std::size_t>(n)];
    const double nd = static_cast<double>(n);
    const double slack = 1e-9 * beta;
    CAPTURE(n);
    CHECK(beta >= 0.5 * nd * nd - slack);
    CHECK(beta <= 0.5 * nd * nd + nd * std::log(nd) + slack);
    CHECK(table.beta[static_cast<std::size_t>(n)] >
          table.beta[static_cast<std::size_t>(n - 1)]);
    CHECK(table.t[static_cast<std::size_t>(n)] <
          table.t[static_cast<std::size_t>(n - 1)]);
    CHECK(table.t[static_cast<std::size_t>(n)] > 0.0);
    CHECK(table.t[static_cast<std::size_t>(n)] < 1.0);
    CHECK(table.v[static_cast<std::size_t>(n)] >
          table.v[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("delta is nondecreasing and matches the ghat route") {
  const qsel::BetaThresholdTable table = qsel::build_tables(101);
  for (int n = 1; n <= 99; ++n) {
    CAPTURE(n);
    CHECK(table.delta[static_cast<std::size_t>(n)] <=
          table.delta[static_cast<std::size_t>(n + 1)]);
  }
  for (int n : {1, 10, 100}) {
    const double direct = table.delta[static_cast<std::size_t>(n)];
    const double via =
        qsel::delta_via_ghat(table.beta[static_cast<std::size_t>(n)]);
    CAPTURE(n);
    CHECK(std::abs(via - direct) <= 1e-9 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("exact_variance_step closed forms") {
  // only the geometric term survives when the residual problem is empty
  CHECK(qsel::exact_variance_step(0.3, 0.0, 0.0) ==
        doctest::Approx(1.0 / 0.09 - 1.0 / 0.3).epsilon(1e-14));

  // v(2) assembled from the moment formulas at t2 = solve_H(1)
  const double t2 = qsel::solve_H(1.0);
  const double expected = (1.0 / (t2 * t2) - 1.0 / t2) + 1.0 / (1.0 - t2) -
                          (std::log(1.0 - t2) / t2) * (std::log(1.0 - t2) / t2);
  CHECK(qsel::exact_variance_step(t2, 1.0, 0.0) ==
        doctest::Approx(expected).epsilon(1e-13));
  CHECK(qsel::exact_variance_step(t2, 1.0, 0.0) ==
        doctest::Approx(1.0059891527678268).epsilon(1e-12));
}

TEST_CASE("exact_variance_step domain handling") {
  CHECK_THROWS_AS(qsel::exact_variance_step(1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(qsel::exact_variance_step(0.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(qsel::exact_variance_step(1.25, 1.0, 0.0), std::domain_error);
  // t = 1 with no residual problem is the trivial n=1 row
  CHECK(qsel::exact_variance_step(1.0, 0.0, 0.0) == 0.0);
}

TEST_CASE("variance ratio moves toward n^3/3") {
  const qsel::BetaThresholdTable table = qsel::build_tables(5000);
  const auto ratio = [&table](int n) {
    const double nd = static_cast<double>(n);
    return 3.0 * table.v[static_cast<std::size_t>(n)] / (nd * nd * nd);
  };
  CHECK(std::abs(ratio(100) - 1.0) > std::abs(ratio(1000) - 1.0));
  CHECK(std::abs(ratio(1000) - 1.0) > std::abs(ratio(5000) - 1.0));
  CHECK(ratio(5000) > 0.90);
  CHECK(ratio(5000) < 1.10);
}
