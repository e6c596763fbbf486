#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dml/moments.hpp"
#include "dml/rng.hpp"

using dml::nongeneric_brute_oracle;
using dml::nongeneric_moment;
using dml::Rational;

namespace {

// n = 1 case in product form: delta(k)/(4+b+4k)_4 * (2k+2+b)/4 *
// ((k+1)^2 (2k+2+b) - b (2k+4+b)^2 / 4).
Rational nongeneric_first_order(long beta, long k) {
  Rational f = dml::factorial(static_cast<unsigned long>(k));
  Rational delta = f * f * f * dml::pochhammer(Rational(1) + Rational(beta, 2), k) /
                   dml::pochhammer(Rational(4 + beta), 4 * k);
  const Rational b(beta), kk(k);
  Rational brace = (kk + 1) * (kk + 1) * (2 * kk + 2 + b) - b * (2 * kk + 4 + b) * (2 * kk + 4 + b) / 4;
  return delta / dml::pochhammer(Rational(4 + beta + 4 * k), 4) * (2 * kk + 2 + b) / 4 * brace;
}

}  // namespace

TEST_CASE("non-generic moment fixed values") {
  CHECK(nongeneric_moment(2, 1, 0) == Rational(-1, 216));
  CHECK(nongeneric_brute_oracle(2, 1, 0) == Rational(-1, 216));
  for (long beta : {1L, 2L, 3L, 4L, 7L}) {
    CHECK(nongeneric_moment(beta, 0, 0) == Rational(1));  // delta(0) = 1
    for (long k = 0; k <= 4; ++k)
      CHECK(nongeneric_brute_oracle(beta, 0, k) == nongeneric_moment(beta, 0, k));
  }
  CHECK(nongeneric_moment(4, 1, 1) == nongeneric_brute_oracle(4, 1, 1));
}

TEST_CASE("reduced sum equals the double-sum oracle across the family") {
  for (long beta : {1L, 2L, 4L})
    for (long n = 0; n <= 6; ++n)
      for (long k = 0; k <= 6; ++k)
        CHECK(nongeneric_moment(beta, n, k) == nongeneric_brute_oracle(beta, n, k));
}

TEST_CASE("first-order display matches at random (beta, k)") {
  dml::RngStream rng(42);
  for (int i = 0; i < 20; ++i) {
    const long beta = 1 + static_cast<long>(rng.next_u64() % 8);
    const long k = static_cast<long>(rng.next_u64() % 12);
    CHECK(nongeneric_moment(beta, 1, k) == nongeneric_first_order(beta, k));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(nongeneric_moment(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(nongeneric_brute_oracle(-1, 1, 0), std::invalid_argument);
}
