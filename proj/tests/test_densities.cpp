#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dml/densities.hpp"

using dml::adaptive_integrate;
using dml::bures_det_density;
using dml::density_moment;
using dml::density_moment_exact;
using dml::hs_det_density;
using dml::Metric;
using dml::Rational;

TEST_CASE("hs density endpoints") {
  CHECK(hs_det_density(0.0) == doctest::Approx(63.0 / 4.0));
  CHECK(hs_det_density(1e-12) == doctest::Approx(63.0 / 4.0).epsilon(1e-4));
  CHECK(hs_det_density(1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(hs_det_density(-0.1), std::domain_error);
  CHECK_THROWS_AS(hs_det_density(1.1), std::domain_error);
}

TEST_CASE("bures density diverges like 6/sqrt(t) at the origin") {
  // f sqrt(t) = 6 - (64/pi) t^(1/4) + o(t^(1/4))
  for (double t : {1e-6, 1e-8, 1e-10, 1e-12})
    CHECK(std::fabs(bures_det_density(t) * std::sqrt(t) - 6.0) < 21.0 * std::pow(t, 0.25));
  CHECK_THROWS_AS(bures_det_density(0.0), std::domain_error);
}

TEST_CASE("normalization to 1e-10") {
  for (Metric m : {Metric::hs, Metric::bures})
    CHECK(std::fabs(density_moment(m, 0) - 1.0) < 1e-10);
}

TEST_CASE("moments match the exact Pochhammer values to order 30") {
  CHECK(density_moment_exact(Metric::hs, 1) == Rational(16, 143));
  CHECK(density_moment_exact(Metric::bures, 1) == Rational(1, 32));
  for (Metric m : {Metric::hs, Metric::bures}) {
    for (long n = 0; n <= 30; ++n) {
      const double exact = density_moment_exact(m, n).to_double();
      const double numeric = density_moment(m, n);
      CHECK(std::fabs(numeric - exact) <= 1e-8 * std::max(1.0, std::fabs(exact)));
    }
  }
}

TEST_CASE("product of two uniform variables has density -log x") {
  auto unit = [](double) { return 1.0; };
  auto f = dml::product_density(unit, unit);
  for (double x : {0.05, 0.2, 0.5, 0.9})
    CHECK(f(x) == doctest::Approx(-std::log(x)).epsilon(1e-9));
}

TEST_CASE("product lemma reproduces the closed-form densities") {
  // hs: 2s times the beta-type factor (1/(2B(2,7/2)))(1-sqrt(s))^{5/2}
  auto f1 = [](double s) { return 2.0 * s; };
  auto f2 = [](double s) { return 63.0 / 8.0 * std::pow(1.0 - std::sqrt(s), 2.5); };
  auto hs = dml::product_density(f1, f2);
  for (double x : {0.01, 0.1, 0.3, 0.6, 0.9})
    CHECK(std::fabs(hs(x) - hs_det_density(x)) < 1e-6);

  // bures: (s^{-1/2} - 1) times (8/pi) s^{-1/4} (1 - sqrt(s))^{3/2}
  auto g1 = [](double s) { return 1.0 / std::sqrt(s) - 1.0; };
  auto g2 = [](double s) {
    return 8.0 / 3.14159265358979323846 * std::pow(s, -0.25) * std::pow(1.0 - std::sqrt(s), 1.5);
  };
  auto bures = dml::product_density(g1, g2);
  for (double x : {0.01, 0.1, 0.3, 0.6, 0.9})
    CHECK(std::fabs(bures(x) - bures_det_density(x)) < 1e-6);
}

TEST_CASE("densities are nonnegative on a fine grid") {
  for (int i = 1; i <= 10000; ++i) {
    const double t = i / 10000.0;
    CHECK(hs_det_density(t) >= -1e-12);
    CHECK(bures_det_density(t) >= -1e-12);
  }
}

TEST_CASE("hs dominates bures above the crossing near 0.0217") {
  const double c = dml::hs_bures_crossing();
  CHECK(c == doctest::Approx(0.021702).epsilon(0.02));
  CHECK(hs_det_density(0.5 * c) < bures_det_density(0.5 * c));
  CHECK(hs_det_density(2.0 * c) > bures_det_density(2.0 * c));
}

TEST_CASE("both densities vanish like (1-t)^{7/2} at the right endpoint") {
  // limits of f(1-h)/h^{7/2}: hs 9/2^{7/2}, bures 64/(35 pi 2^{7/2})
  const double c_hs = 9.0 / std::pow(2.0, 3.5);
  const double c_bures = 64.0 / (35.0 * 3.14159265358979323846 * std::pow(2.0, 3.5));
  for (double h : {1e-2, 1e-3}) {
    CHECK(hs_det_density(1.0 - h) / std::pow(h, 3.5) == doctest::Approx(c_hs).epsilon(0.25));
    CHECK(bures_det_density(1.0 - h) / std::pow(h, 3.5) == doctest::Approx(c_bures).epsilon(0.25));
  }
  // boundedness down to h = 1e-6, allowing for the double-precision noise
  // floor of the cancellation-heavy closed forms
  for (double h : {1e-4, 1e-5, 1e-6}) {
    CHECK(std::fabs(hs_det_density(1.0 - h)) < 1e-11 + 10.0 * std::pow(h, 3.5));
    CHECK(std::fabs(bures_det_density(1.0 - h)) < 1e-11 + 10.0 * std::pow(h, 3.5));
  }
}

TEST_CASE("closed-density bundles expose evaluation and exact moments") {
  for (Metric m : {Metric::hs, Metric::bures}) {
    auto d = dml::closed_density(m);
    CHECK(d.metric == m);
    CHECK(d.evaluation(0.5) == (m == Metric::hs ? hs_det_density(0.5) : bures_det_density(0.5)));
    CHECK(d.moment(2) == density_moment_exact(m, 2));
  }
}

TEST_CASE("adaptive integration baseline") {
  CHECK(adaptive_integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(adaptive_integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}
