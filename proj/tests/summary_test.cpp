#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qsel/summary.hpp"

namespace {

std::vector<double> random_samples(std::mt19937_64& engine, std::size_t count) {
  std::uniform_real_distribution<double> dist(-5.0, 20.0);
  std::vector<double> out(count);
  for (double& x : out) x = dist(engine);
  return out;
}

}  // namespace

TEST_CASE("summary of a constant sample") {
  qsel::SimulationSummary s;
  for (int i = 0; i < 10; ++i) s.push(1.0);
  CHECK(s.count() == 10);
  CHECK(s.mean() == 1.0);
  CHECK(s.variance() == 0.0);
  CHECK(s.std_error() == 0.0);
  CHECK(s.min() == 1.0);
  CHECK(s.max() == 1.0);
}

TEST_CASE("summary basic relations") {
  qsel::SimulationSummary s;
  for (double x : {2.0, 4.0, 6.0, 8.0}) s.push(x);
  CHECK(s.mean() == doctest::Approx(5.0));
  CHECK(s.variance() == doctest::Approx(20.0 / 3.0));  // unbiased
  CHECK(s.std_error() == doctest::Approx(std::sqrt(s.variance() / 4.0)));
  CHECK(s.min() <= s.mean());
  CHECK(s.mean() <= s.max());
}

TEST_CASE("merging equals pooling, for any split point") {
  std::mt19937_64 engine(123);
  const std::vector<double> samples = random_samples(engine, 500);
  const qsel::SimulationSummary pooled =
      qsel::SimulationSummary::from_samples(samples);

  for (std::size_t split : {0ul, 1ul, 250ul, 499ul, 500ul}) {
    qsel::SimulationSummary a, b;
    for (std::size_t i = 0; i < split; ++i) a.push(samples[i]);
    for (std::size_t i = split; i < samples.size(); ++i) b.push(samples[i]);
    a.merge(b);
    CAPTURE(split);
    CHECK(a.count() == pooled.count());
    CHECK(a.mean() == doctest::Approx(pooled.mean()).epsilon(1e-9));
    CHECK(a.variance() == doctest::Approx(pooled.variance()).epsilon(1e-9));
    CHECK(a.min() == pooled.min());
    CHECK(a.max() == pooled.max());
  }
}

TEST_CASE("merge is associative up to reassociation tolerance") {
  std::mt19937_64 engine(99);
  qsel::SimulationSummary a = qsel::SimulationSummary::from_samples(
      random_samples(engine, 100));
  qsel::SimulationSummary b = qsel::SimulationSummary::from_samples(
      random_samples(engine, 37));
  qsel::SimulationSummary c = qsel::SimulationSummary::from_samples(
      random_samples(engine, 211));

  qsel::SimulationSummary left = a;
  left.merge(b);
  left.merge(c);

  qsel::SimulationSummary bc = b;
  bc.merge(c);
  qsel::SimulationSummary right = a;
  right.merge(bc);

  CHECK(left.count() == right.count());
  CHECK(left.mean() == doctest::Approx(right.mean()).epsilon(1e-9));
  CHECK(left.variance() == doctest::Approx(right.variance()).epsilon(1e-9));
}

TEST_CASE("merging an empty summary is the identity") {
  qsel::SimulationSummary a;
  a.push(3.0);
  a.push(5.0);
  const double mean = a.mean();
  qsel::SimulationSummary empty;
  a.merge(empty);
  CHECK(a.count() == 2);
  CHECK(a.mean() == mean);

  qsel::SimulationSummary b;
  b.merge(a);
  CHECK(b.count() == 2);
  CHECK(b.mean() == mean);
}

TEST_CASE("variance standard error agrees with the normal-theory value") {
  // For N(0,1) data, Var(s^2) ~ 2 sigma^4 / N; check the estimator lands in
  // the right ballpark on a large normal sample.
  std::mt19937_64 engine(2024);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> samples(200000);
  for (double& x : samples) x = normal(engine);
  const double se = qsel::variance_standard_error(samples);
  const double theory = std::sqrt(2.0 / static_cast<double>(samples.size()));
  CHECK(se == doctest::Approx(theory).epsilon(0.05));
}
