#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dml/mnatsakanov.hpp"

using dml::make_moment_sequence;
using dml::mnatsakanov_cdf;
using dml::mnatsakanov_cdf_coefficients;
using dml::Rational;
using dml::SequenceVariable;

namespace {

dml::MomentSequence power_sequence(const Rational& c, long N) {
  std::vector<Rational> mu;
  Rational p(1);
  for (long i = 0; i <= N; ++i) {
    mu.push_back(p);
    p *= c;
  }
  return make_moment_sequence(SequenceVariable::det, Rational(0), mu);
}

}  // namespace

TEST_CASE("uniform CDF is recovered") {
  std::vector<Rational> mu;
  for (long i = 0; i <= 50; ++i) mu.emplace_back(1, i + 1);
  auto ms = make_moment_sequence(SequenceVariable::det, Rational(0), mu);
  CHECK(std::fabs(mnatsakanov_cdf(ms, 50, Rational(1, 2), 64).to_double() - 0.5) < 0.02);
  CHECK(std::fabs(mnatsakanov_cdf(ms, 50, Rational(1, 4), 64).to_double() - 0.25) < 0.02);
  CHECK(mnatsakanov_cdf(ms, 50, Rational(1), 64).to_double() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cdf coefficients sum to exactly one") {
  auto ms = power_sequence(Rational(37, 100), 80);
  auto b = mnatsakanov_cdf_coefficients(ms, 80);
  Rational sum(0);
  for (const auto& x : b) sum += x;
  CHECK(sum == Rational(1));
}

TEST_CASE("a point mass produces a CDF step") {
  const Rational c(37, 100);
  auto ms = power_sequence(c, 100);
  const long M = 100;
  CHECK(mnatsakanov_cdf(ms, M, Rational(1, 5), 64).to_double() < 0.05);
  CHECK(mnatsakanov_cdf(ms, M, Rational(6, 10), 64).to_double() > 0.95);
  // steepness around c: the mass concentrates within ~M^{-1/2} of the atom
  const double below = mnatsakanov_cdf(ms, M, Rational(25, 100), 64).to_double();
  const double above = mnatsakanov_cdf(ms, M, Rational(50, 100), 64).to_double();
  CHECK(above - below > 0.85);
}

TEST_CASE("recovered two-rebit PT density integrates to one and has a plausible tail") {
  auto ms = dml::build_moment_sequence(Rational(1, 2), SequenceVariable::ptdet, 200);
  const long M = 200;
  auto density = dml::mnatsakanov_density(ms, M, 64);
  double mass = 0.0;
  for (const auto& d : density) mass += d.to_double() / static_cast<double>(M);
  CHECK(std::fabs(mass - 1.0) < 0.02);
  const double tail = dml::mnatsakanov_tail(ms, M, *ms.threshold, 64).to_double();
  CHECK(tail >= 0.40);
  CHECK(tail <= 0.50);
}

TEST_CASE("input validation") {
  auto ms = power_sequence(Rational(1, 2), 10);
  CHECK_THROWS_AS(mnatsakanov_cdf(ms, 11, Rational(1, 2), 64), std::invalid_argument);
  CHECK_THROWS_AS(mnatsakanov_cdf(ms, 10, Rational(2), 64), std::invalid_argument);
}
