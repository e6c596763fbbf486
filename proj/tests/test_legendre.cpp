#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dml/legendre.hpp"
#include "dml/moment_sequence.hpp"

using dml::BigReal;
using dml::legendre_coefficients;
using dml::make_moment_sequence;
using dml::Rational;
using dml::SequenceVariable;
using dml::tail_probability;

namespace {

dml::MomentSequence uniform_sequence(long N) {
  std::vector<Rational> mu;
  for (long i = 0; i <= N; ++i) mu.emplace_back(1, i + 1);
  return make_moment_sequence(SequenceVariable::det, Rational(0), mu);
}

bool close(const BigReal& x, double y, double tol) { return std::fabs(x.to_double() - y) <= tol; }

}  // namespace

TEST_CASE("shifted Legendre coefficients") {
  CHECK(dml::shifted_legendre_coefficients(0) == std::vector<Rational>{Rational(1)});
  CHECK(dml::shifted_legendre_coefficients(1) == std::vector<Rational>{Rational(-1), Rational(2)});
  CHECK(dml::shifted_legendre_coefficients(2) ==
        std::vector<Rational>{Rational(1), Rational(-6), Rational(6)});
  // orthonormality against exact monomial moments of the uniform density:
  // integral Pt_j Pt_l = delta_jl / (2j+1)
  for (long j = 0; j <= 6; ++j) {
    for (long l = 0; l <= 6; ++l) {
      auto pj = dml::shifted_legendre_coefficients(j);
      auto pl = dml::shifted_legendre_coefficients(l);
      Rational ip(0);
      for (std::size_t a = 0; a < pj.size(); ++a)
        for (std::size_t b = 0; b < pl.size(); ++b)
          ip += pj[a] * pl[b] / Rational(static_cast<long>(a + b) + 1);
      CHECK(ip == (j == l ? Rational(1, 2 * j + 1) : Rational(0)));
    }
  }
}

TEST_CASE("projection of the uniform density is the constant") {
  auto ms = uniform_sequence(16);
  auto da = legendre_coefficients(ms, 16);
  CHECK(da.lambda[0] == BigReal(1L, da.working_digits));
  for (int j = 1; j <= 16; ++j)
    CHECK(da.lambda[static_cast<std::size_t>(j)].abs() < BigReal::pow10(-50, 32));
  // uniform tail above 16/17 is 1/17
  CHECK(close(tail_probability(da, Rational(16, 17)), 1.0 / 17.0, 1e-30));
}

TEST_CASE("projection of the density 2x is exact at order 1") {
  std::vector<Rational> mu;
  for (long i = 0; i <= 8; ++i) mu.emplace_back(2, i + 2);
  auto ms = make_moment_sequence(SequenceVariable::det, Rational(0), mu);
  auto da = legendre_coefficients(ms, 1);
  CHECK((da.lambda[1] - BigReal(Rational(1, 3), da.working_digits)).abs() <
        BigReal::pow10(-da.digits, 32));
  // f_1(x) = 1 + 3 * (1/3) * (2x - 1) = 2x
  CHECK(close(dml::density_value(da, BigReal(Rational(1, 4), 64)), 0.5, 1e-40));
  CHECK(close(dml::density_value(da, BigReal(Rational(9, 10), 64)), 1.8, 1e-40));
  // tail above t: 1 - t^2, exactly
  CHECK(close(tail_probability(da, Rational(1, 3)), 8.0 / 9.0, 1e-40));
}

TEST_CASE("moment reproduction: integral x^j f_N = mu_j for j <= N") {
  auto ms = build_moment_sequence(Rational(1, 2), SequenceVariable::ptdet, 8);
  const long N = 8;
  auto da = legendre_coefficients(ms, N);
  // exact rational lambda and polynomial integration at small N
  std::vector<Rational> coeffs(static_cast<std::size_t>(N) + 1, Rational(0));
  for (long j = 0; j <= N; ++j) {
    auto pj = dml::shifted_legendre_coefficients(j);
    Rational lam(0);
    for (std::size_t i = 0; i < pj.size(); ++i) lam += pj[i] * ms.mu[i];
    for (std::size_t i = 0; i < pj.size(); ++i) coeffs[i] += Rational(2 * j + 1) * lam * pj[i];
  }
  for (long j = 0; j <= N; ++j) {
    Rational back(0);  // integral x^j f_N = sum_i c_i / (i + j + 1)
    for (long i = 0; i <= N; ++i)
      back += coeffs[static_cast<std::size_t>(i)] / Rational(i + j + 1);
    CHECK(back == ms.mu[static_cast<std::size_t>(j)]);
  }
  // and the float-path lambdas agree with the exact ones
  for (long j = 0; j <= N; ++j) {
    auto pj = dml::shifted_legendre_coefficients(j);
    Rational lam(0);
    for (std::size_t i = 0; i < pj.size(); ++i) lam += pj[i] * ms.mu[i];
    CHECK((da.lambda[static_cast<std::size_t>(j)] - BigReal(lam, da.working_digits)).abs() <
          BigReal::pow10(-da.digits, 32));
  }
}

TEST_CASE("polynomial densities are reconstructed exactly") {
  // f(x) = 6x(1-x): moments 6/((i+2)(i+3))
  std::vector<Rational> mu;
  for (long i = 0; i <= 12; ++i) mu.emplace_back(Rational(6) / Rational((i + 2) * (i + 3)));
  auto ms = make_moment_sequence(SequenceVariable::det, Rational(0), mu);
  const Rational c(16, 17);
  const Rational expect = Rational(1) - Rational(3) * c * c + Rational(2) * c * c * c;
  for (long N : {2L, 5L, 12L}) {
    auto da = legendre_coefficients(ms, N);
    // tail above c: integral 6x - 6x^2 = 1 - 3c^2 + 2c^3
    BigReal diff = tail_probability(da, c) - BigReal(expect, 64);
    CHECK(diff.abs() < BigReal::pow10(-45, 32));
  }
}

TEST_CASE("beta-type tail converges with the basis order") {
  // f2(t) = (63/8) (1 - sqrt(t))^{5/2}: moments (2)_{2n} / (11/2)_{2n};
  // tail above c: (63/4) [ (2/7) w^{7/2} - (2/9) w^{9/2} ], w = 1 - sqrt(c)
  std::vector<Rational> mu;
  for (long n = 0; n <= 64; ++n)
    mu.push_back(dml::pochhammer(Rational(2), 2 * n) / dml::pochhammer(Rational(11, 2), 2 * n));
  auto ms = make_moment_sequence(SequenceVariable::det, Rational(0), mu);
  const double c = 0.25;
  const double w = 1.0 - std::sqrt(c);
  const double expect = 63.0 / 4.0 * (2.0 / 7.0 * std::pow(w, 3.5) - 2.0 / 9.0 * std::pow(w, 4.5));
  double err_prev = 1.0;
  for (long N : {8L, 16L, 32L, 64L}) {
    auto da = legendre_coefficients(ms, N);
    const double err = std::fabs(tail_probability(da, Rational(1, 4)).to_double() - expect);
    CHECK(err < err_prev);
    err_prev = err;
  }
  CHECK(err_prev < 1e-6);
}

TEST_CASE("estimate records carry the full configuration") {
  auto rec = dml::separability_estimate(Rational(1), SequenceVariable::ptdet, 40, 64,
                                        dml::ReconstructionMethod::legendre);
  CHECK(rec.method == "legendre");
  CHECK(rec.n_moments == 40);
  CHECK(rec.precision_digits == 64);
  CHECK(rec.threshold == Rational(16, 17));
  // a 40-moment run already lands within a percent of 8/33
  CHECK(close(rec.estimate, 8.0 / 33.0, 0.01));
  CHECK_THROWS_AS(
      dml::separability_estimate(Rational(1), SequenceVariable::det, 10, 64,
                                 dml::ReconstructionMethod::legendre),
      std::invalid_argument);
}

TEST_CASE("input validation") {
  auto ms = uniform_sequence(4);
  CHECK_THROWS_AS(legendre_coefficients(ms, 9), std::invalid_argument);
  CHECK_THROWS_AS(legendre_coefficients(ms, 4, 8), std::invalid_argument);
  auto da = legendre_coefficients(ms, 4);
  CHECK_THROWS_AS(tail_probability(da, Rational(3, 2)), std::invalid_argument);
}
