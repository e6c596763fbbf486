#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dml/moments.hpp"
#include "dml/reference_tables.hpp"
#include "oracles.hpp"

using dml::bivariate_moment;
using dml::f0_det_moment;
using dml::f1_adjustment;
using dml::pt_moment;
using dml::product_moment;
using dml::Rational;
using dml::ReferenceTableId;

namespace {
const Rational kHalf(1, 2);
}

TEST_CASE("determinant moments against the gamma-product oracle") {
  for (long k = 0; k <= 20; ++k) {
    CHECK(f0_det_moment(kHalf, k) == dml::oracle::rebit_det_moment_gamma(k));
    CHECK(f0_det_moment(Rational(1), k) == dml::oracle::qubit_det_moment_gamma(k));
  }
  CHECK(f0_det_moment(kHalf, 1) == Rational(1, 2288));
  CHECK(f0_det_moment(Rational(1), 1) == Rational(1, 3876));
  CHECK(f0_det_moment(Rational(17, 5), 0) == Rational(1));
  CHECK_THROWS_AS(f0_det_moment(Rational(-1), 1), std::domain_error);
}

TEST_CASE("adjustment factor fixed values") {
  CHECK(f1_adjustment(kHalf, 1, 0) == Rational(-1, 858));
  CHECK(f1_adjustment(kHalf, 1, 1) == Rational(0));
  CHECK(f1_adjustment(kHalf, 2, 0) == Rational(27, 2489344));
  CHECK(f1_adjustment(Rational(1), 1, 0) == Rational(-7, 3876));
  CHECK(f1_adjustment(Rational(2), 1, 0) == Rational(-49, 21576));
  CHECK(f1_adjustment(Rational(3), 0, 5) == Rational(1));
}

TEST_CASE("alternate Pochhammer base differs at alpha = 1/2 and matches at alpha = 1") {
  CHECK(dml::oracle::adjustment_alternate_base(kHalf, 1, 0) == Rational(-29, 27456));
  CHECK(dml::oracle::adjustment_alternate_base(kHalf, 1, 0) != f1_adjustment(kHalf, 1, 0));
  for (long n = 1; n <= 4; ++n)
    for (long k = 0; k <= 4; ++k)
      CHECK(dml::oracle::adjustment_alternate_base(Rational(1), n, k) == f1_adjustment(Rational(1), n, k));
}

TEST_CASE("bivariate moments") {
  CHECK(bivariate_moment(Rational(1), 1, 1) == Rational(-1, 4576264));
  CHECK(bivariate_moment(kHalf, 2, 2) == Rational(7, 5696343244800));
  CHECK(bivariate_moment(kHalf, 13, 0) ==
        Rational::from_string("-31283325154283/736092406055063912488279599166259200"));
}

TEST_CASE("reference tables are reproduced exactly") {
  for (long n = 1; n <= 13; ++n) {
    CHECK(pt_moment(kHalf, n) == dml::table_lookup(ReferenceTableId::rebit_pt, n));
    CHECK(product_moment(kHalf, n) == dml::table_lookup(ReferenceTableId::rebit_product, n));
  }
  CHECK(dml::table_lookup(ReferenceTableId::rebit_pt, 1) == Rational(-1, 858));
  CHECK(dml::table_lookup(ReferenceTableId::rebit_product, 1) == Rational(0));
  CHECK(dml::table_lookup(ReferenceTableId::rebit_degenerate, 1) == Rational(-5, 2376));
  CHECK(dml::table_rows(ReferenceTableId::rebit_degenerate) == 10);
  CHECK_THROWS_AS(dml::table_lookup(ReferenceTableId::rebit_pt, 14), std::out_of_range);
  CHECK_THROWS_AS(dml::table_lookup(ReferenceTableId::rebit_pt, 0), std::out_of_range);
}

TEST_CASE("degenerate-boundary table matches its printed decimal column") {
  const double decimals[10] = {-0.00210438, 0.0000184133, -2.58787e-7, 4.92538e-9, -1.14313e-10,
                               3.05591e-12, -9.08149e-14, 2.9303e-15,  -1.00986e-16, 3.67286e-18};
  for (long n = 1; n <= 10; ++n) {
    const double v = dml::table_lookup(ReferenceTableId::rebit_degenerate, n).to_double();
    CHECK(v == doctest::Approx(decimals[n - 1]).epsilon(1e-5));
  }
}

TEST_CASE("printed rational-function families, k = 0..12") {
  for (long k = 0; k <= 12; ++k) {
    const Rational kk(k);
    // two-rebit n = 1
    CHECK(f1_adjustment(kHalf, 1, k) ==
          (kk - 1) * (kk * (2 * kk + 11) + 16) / (Rational(32) * (kk + 3) * (4 * kk + 11) * (4 * kk + 13)));
    // two-rebit n = 2
    CHECK(f1_adjustment(kHalf, 2, k) ==
          (kk * (kk * (kk * (kk * (4 * kk * (kk + 12) + 203) + 368) + 709) + 2940) + 4860) /
              (Rational(1024) * (kk + 3) * (kk + 4) * (4 * kk + 11) * (4 * kk + 13) * (4 * kk + 15) *
               (4 * kk + 17)));
    // two-rebit n = 3
    {
      Rational a3 = Rational(8) * kk.pow(9) + Rational(180) * kk.pow(8) + Rational(1674) * kk.pow(7) +
                    Rational(8559) * kk.pow(6) + Rational(29493) * kk.pow(5) + Rational(84291) * kk.pow(4) +
                    Rational(136801) * kk.pow(3) - Rational(401334) * kk.pow(2) - Rational(2516616) * kk -
                    Rational(3612816);
      Rational b3 = Rational(32768) * (kk + 3) * (kk + 4) * (kk + 5) * (4 * kk + 11) * (4 * kk + 13) *
                    (4 * kk + 15) * (4 * kk + 17) * (4 * kk + 19) * (4 * kk + 21);
      CHECK(f1_adjustment(kHalf, 3, k) == a3 / b3);
    }
    // two-rebit n = 4
    {
      Rational a4 = Rational(16) * kk.pow(12) + Rational(576) * kk.pow(11) + Rational(9112) * kk.pow(10) +
                    Rational(84496) * kk.pow(9) + Rational(525681) * kk.pow(8) +
                    Rational(2389416) * kk.pow(7) + Rational(7805462) * kk.pow(6) +
                    Rational(13904508) * kk.pow(5) + Rational(6212189) * kk.pow(4) +
                    Rational(166748972) * kk.pow(3) + Rational(1636873812) * kk.pow(2) +
                    Rational(5496485760L) * kk + Rational(6610161600L);
      Rational b4 = dml::family_denominator(dml::NumeratorFamily::rebit, 4, k);
      CHECK(f1_adjustment(kHalf, 4, k) == a4 / b4);
    }
    // two-qubit n = 1
    CHECK(f1_adjustment(Rational(1), 1, k) ==
          (kk * (kk * (kk + 6) - 1) - 42) / (Rational(8) * (2 * kk + 9) * (4 * kk + 17) * (4 * kk + 19)));
    // two-qubit n = 2
    CHECK(f1_adjustment(Rational(1), 2, k) ==
          (kk * (kk * (kk * (kk * (kk * (kk + 15) + 67) + 45) + 220) + 4260) + 10944) /
              (Rational(64) * (2 * kk + 9) * (2 * kk + 11) * (4 * kk + 17) * (4 * kk + 19) * (4 * kk + 21) *
               (4 * kk + 23)));
  }
}

TEST_CASE("classical limit at alpha = 0") {
  using dml::classical_product_moment;
  CHECK(classical_product_moment(0) == Rational(1));
  CHECK(classical_product_moment(1) == Rational(1, 415800));
  for (long n = 1; n <= 10; ++n) CHECK(classical_product_moment(n) == product_moment(Rational(0), n));
}

TEST_CASE("central adjustment and moment-ratio identities") {
  using dml::f2_central_adjustment;
  using dml::r_ratio;
  for (long k = 0; k <= 6; ++k) {
    CHECK(f2_central_adjustment(kHalf, 0, k) == Rational(1));
    CHECK(r_ratio(kHalf, 0, k) == Rational(1));
    CHECK(f2_central_adjustment(kHalf, 1, k) ==
          Rational(-1) / (Rational(16) * (4 * Rational(k) + 13) * (Rational(k) + 3)));
  }
  {
    const Rational kk(3);
    CHECK(f2_central_adjustment(kHalf, 2, 3) ==
          (kk + 12) * (2 * kk + 7) /
              (Rational(256) * (kk + 3) * (kk + 4) * (4 * kk + 11) * (4 * kk + 13) * (4 * kk + 17)));
  }
  // decomposition identity F1(n,k) = sum_j C(n,j) F2(j, k+n-j) R(n-j, k)
  for (const Rational& alpha : {kHalf, Rational(1)}) {
    for (long n = 0; n <= 5; ++n) {
      for (long k = 0; k <= 5; ++k) {
        Rational sum(0);
        for (long j = 0; j <= n; ++j)
          sum += dml::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j)) *
                 f2_central_adjustment(alpha, j, k + n - j) * r_ratio(alpha, n - j, k);
        CHECK(sum == f1_adjustment(alpha, n, k));
      }
    }
  }
}

TEST_CASE("hypergeometric cross-check oracles agree with the finite sum") {
  // generic-k 5F4 route vs the interpolated rational function
  for (const Rational& alpha : {kHalf, Rational(1), Rational(2)}) {
    for (long n = 1; n <= 4; ++n) {
      auto a = dml::numerator_polynomial(dml::NumeratorFamily::general, n, alpha);
      for (const Rational& k : {Rational(1, 7), Rational(9, 2), Rational(22, 3)}) {
        Rational lhs = dml::oracle::adjustment_5f4_generic(alpha, n, k);
        Rational den = dml::pow2(6 * n) * dml::pochhammer(k + Rational(3) * alpha + Rational(3, 2), n) *
                       dml::pochhammer(Rational(2) * k + Rational(6) * alpha + Rational(5, 2), 2 * n);
        CHECK(lhs == a.eval(k) / den);
      }
    }
  }
  // k = 0 route (the n = 1 case needs its sum replaced by 1)
  for (const Rational& alpha : {kHalf, Rational(1), Rational(2)})
    for (long n = 1; n <= 8; ++n)
      CHECK(dml::oracle::pt_moment_hypergeometric(alpha, n) == pt_moment(alpha, n));
  // n = k route
  for (const Rational& alpha : {kHalf, Rational(1), Rational(2)})
    for (long n = 0; n <= 8; ++n)
      CHECK(dml::oracle::product_moment_hypergeometric(alpha, n) == product_moment(alpha, n));
}

TEST_CASE("unit-interval transformed identities") {
  using dml::transformed_unit_interval_factor;
  CHECK(transformed_unit_interval_factor(0) == Rational(6736, 7293));
  for (long k = 0; k <= 5; ++k) {
    const Rational kk(k);
    CHECK(transformed_unit_interval_factor(k) ==
          Rational(8) * (kk * (kk * (34 * kk + 297) + 867) + 842) /
              (Rational(17) * (kk + 3) * (4 * kk + 11) * (4 * kk + 13)));
    CHECK(transformed_unit_interval_factor(k, 2) ==
          Rational(64) *
              (kk * (kk * (kk * (kk * (68 * kk * (17 * kk + 348) + 200835) + 904492) + 2279781) + 3048904) +
               1689900) /
              (Rational(289) * (kk + 3) * (kk + 4) * (4 * kk + 11) * (4 * kk + 13) * (4 * kk + 15) *
               (4 * kk + 17)));
  }
  CHECK_THROWS_AS(transformed_unit_interval_factor(0, 3), std::invalid_argument);
}

TEST_CASE("bulk sequences agree with per-order evaluation") {
  const auto pt = dml::pt_moment_sequence(kHalf, 8);
  const auto pr = dml::product_moment_sequence(Rational(1), 8);
  const auto dt = dml::det_moment_sequence(Rational(2), 12);
  for (long n = 0; n <= 8; ++n) {
    CHECK(pt[static_cast<std::size_t>(n)] == pt_moment(kHalf, n));
    CHECK(pr[static_cast<std::size_t>(n)] == product_moment(Rational(1), n));
  }
  for (long k = 0; k <= 12; ++k) CHECK(dt[static_cast<std::size_t>(k)] == f0_det_moment(Rational(2), k));
}

TEST_CASE("moment queries dispatch to the right slice") {
  using dml::evaluate;
  using dml::MomentQuery;
  using dml::MomentVariable;
  CHECK(evaluate({kHalf, 1, 0, MomentVariable::bivariate}) == Rational(-1, 858));
  CHECK(evaluate({kHalf, 3, 7, MomentVariable::ptdet}) == pt_moment(kHalf, 3));
  CHECK(evaluate({kHalf, 3, 7, MomentVariable::det}) == f0_det_moment(kHalf, 7));
  CHECK(evaluate({Rational(2), 2, 0, MomentVariable::product}) == product_moment(Rational(2), 2));
  CHECK_THROWS_AS(evaluate({Rational(-1), 1, 0, MomentVariable::det}), std::domain_error);
}

TEST_CASE("determinism: repeated evaluation is bit-identical") {
  const Rational a = bivariate_moment(Rational(7, 3), 5, 4);
  const Rational b = bivariate_moment(Rational(7, 3), 5, 4);
  CHECK(a == b);
  CHECK(a.str() == b.str());
}
