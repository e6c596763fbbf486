#include "dml/moments.hpp"

#include <stdexcept>

namespace dml {

namespace {

void check_alpha(const Rational& alpha) {
  if (alpha.sign() < 0) throw std::domain_error("alpha must be nonnegative");
}

const Rational& half() {
  static const Rational h(1, 2);
  return h;
}

// Factorial cache shared by the integer-argument Pochhammer evaluations.
// Returned by value: growing the cache may reallocate the storage.
thread_local std::vector<Rational> fact_cache{Rational(1)};

Rational cached_factorial(long m) {
  while (static_cast<long>(fact_cache.size()) <= m) {
    long s = static_cast<long>(fact_cache.size());
    fact_cache.push_back(fact_cache.back() * Rational(s));
  }
  return fact_cache[static_cast<std::size_t>(m)];
}

// (x)_m for integer x, via factorials; handles the zero-crossing cases.
Rational poch_integer(long x, long m) {
  if (m == 0) return Rational(1);
  if (x > 0) return cached_factorial(x + m - 1) / cached_factorial(x - 1);
  if (x + m - 1 >= 0) return Rational(0);  // the product crosses zero
  Rational r = cached_factorial(-x) / cached_factorial(-x - m);
  return (m % 2 == 0) ? r : -r;
}

}  // namespace

Rational pochhammer(const Rational& x, long m, PochhammerDirection dir) {
  if (m < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational r(1);
  Rational t = x;
  const Rational step = dir == PochhammerDirection::ascending ? Rational(1) : Rational(-1);
  for (long i = 0; i < m; ++i) {
    r *= t;
    t += step;
  }
  return r;
}

Rational f0_det_moment(const Rational& alpha, long k) {
  check_alpha(alpha);
  if (k < 0) throw std::invalid_argument("f0_det_moment: negative order");
  Rational num = factorial(static_cast<unsigned long>(k)) * pochhammer(alpha + Rational(1), k) *
                 pochhammer(Rational(2) * alpha + Rational(1), k);
  Rational den = pow2(6 * k) * pochhammer(Rational(3) * alpha + Rational(3, 2), k) *
                 pochhammer(Rational(6) * alpha + Rational(5, 2), 2 * k);
  return num / den;
}

Rational f1_adjustment(const Rational& alpha, long n, long k) {
  check_alpha(alpha);
  if (n < 0 || k < 0) throw std::invalid_argument("f1_adjustment: negative order");
  if (n == 0) return Rational(1);

  const Rational a2 = Rational(2) * alpha;
  // Prefix tables for the (n-j)-indexed Pochhammer factors.
  std::vector<Rational> u(n + 1), v(n + 1);
  u[0] = Rational(1);
  v[0] = Rational(1);
  for (long m = 1; m <= n; ++m) {
    u[m] = u[m - 1] * (Rational(k + m) + alpha);  // (k+1+alpha)_m
    v[m] = v[m - 1] * (Rational(k + m) + a2);     // (k+1+2alpha)_m
  }

  // Running product over j of the j-indexed factors:
  //   4^j C(n,j) (alpha)_j (alpha+1/2)_j (-2k-2n-1-5alpha)_j.
  const Rational c0 = Rational(-2 * k - 2 * n - 1) - Rational(5) * alpha;
  Rational run(1);
  Rational sum(0);
  for (long j = 0; j <= n; ++j) {
    if (j > 0) {
      run *= Rational(4) * Rational(n - j + 1, j);
      run *= (alpha + Rational(j - 1)) * (alpha + Rational(j - 1) + half());
      run *= c0 + Rational(j - 1);
    }
    if (run.is_zero()) continue;  // happens when alpha = 0 and j >= 1
    Rational w = poch_integer(k - j + 1, n - j);
    if (w.is_zero()) continue;
    sum += run * w * u[n - j] * v[n - j];
  }

  Rational den = pow2(6 * n) * pochhammer(Rational(k) + Rational(3) * alpha + Rational(3, 2), n) *
                 pochhammer(Rational(2 * k) + Rational(6) * alpha + Rational(5, 2), 2 * n);
  return sum / den;
}

Rational bivariate_moment(const Rational& alpha, long n, long k) {
  return f1_adjustment(alpha, n, k) * f0_det_moment(alpha, k);
}

Rational evaluate(const MomentQuery& q) {
  switch (q.variable) {
    case MomentVariable::det:
      return f0_det_moment(q.alpha, q.k);
    case MomentVariable::ptdet:
      return pt_moment(q.alpha, q.n);
    case MomentVariable::product:
      return product_moment(q.alpha, q.n);
    case MomentVariable::bivariate:
      return bivariate_moment(q.alpha, q.n, q.k);
  }
  throw std::logic_error("evaluate: bad variable");
}

Rational pt_moment(const Rational& alpha, long n) { return bivariate_moment(alpha, n, 0); }

Rational product_moment(const Rational& alpha, long n) { return bivariate_moment(alpha, n, n); }

Rational classical_product_moment(long n) {
  if (n < 0) throw std::invalid_argument("classical_product_moment: negative order");
  Rational g = factorial(static_cast<unsigned long>(2 * n));
  return g * g * g /
         (Rational(4096).pow(n) * pochhammer(Rational(3, 2), 2 * n) * pochhammer(Rational(5, 2), 4 * n));
}

Rational r_ratio(const Rational& alpha, long n, long k) {
  return f0_det_moment(alpha, n + k) / f0_det_moment(alpha, k);
}

Rational f2_central_adjustment(const Rational& alpha, long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("f2_central_adjustment: negative order");
  Rational sum(0);
  for (long j = 0; j <= n; ++j) {
    Rational term = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j)) *
                    f1_adjustment(alpha, j, k + n - j) * r_ratio(alpha, n - j, k);
    sum += ((n - j) % 2 == 0) ? term : -term;
  }
  return sum;
}

std::vector<Rational> pt_moment_sequence(const Rational& alpha, long n_max) {
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n) out.push_back(f1_adjustment(alpha, n, 0));
  return out;
}

std::vector<Rational> product_moment_sequence(const Rational& alpha, long n_max) {
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n) out.push_back(bivariate_moment(alpha, n, n));
  return out;
}

std::vector<Rational> det_moment_sequence(const Rational& alpha, long n_max) {
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  Rational cur(1);
  out.push_back(cur);
  // f0(k+1)/f0(k), written out to avoid recomputing the full products.
  for (long k = 0; k < n_max; ++k) {
    Rational num = Rational(k + 1) * (alpha + Rational(k + 1)) * (Rational(2) * alpha + Rational(k + 1));
    Rational den = Rational(64) * (Rational(3) * alpha + Rational(k) + Rational(3, 2)) *
                   (Rational(6) * alpha + Rational(2 * k) + Rational(5, 2)) *
                   (Rational(6) * alpha + Rational(2 * k) + Rational(7, 2));
    cur *= num / den;
    out.push_back(cur);
  }
  return out;
}

Rational family_denominator(NumeratorFamily family, long n, long k, const Rational& alpha) {
  const Rational kk(k);
  switch (family) {
    case NumeratorFamily::rebit:
      return Rational(128).pow(n) * pochhammer(kk + Rational(3), n) *
             pochhammer(Rational(2) * kk + Rational(11, 2), 2 * n);
    case NumeratorFamily::qubit:
      return pow2(6 * n) * pochhammer(kk + Rational(9, 2), n) *
             pochhammer(Rational(2) * kk + Rational(17, 2), 2 * n);
    case NumeratorFamily::general:
      return pow2(6 * n) * pochhammer(kk + Rational(3) * alpha + Rational(3, 2), n) *
             pochhammer(Rational(2) * kk + Rational(6) * alpha + Rational(5, 2), 2 * n);
  }
  throw std::logic_error("family_denominator: bad family");
}

RationalPolynomial numerator_polynomial(NumeratorFamily family, long n, const Rational& alpha_in) {
  if (n < 1) throw std::invalid_argument("numerator_polynomial: n must be positive");
  Rational alpha = alpha_in;
  if (family == NumeratorFamily::rebit) alpha = half();
  if (family == NumeratorFamily::qubit) alpha = Rational(1);

  auto value_at = [&](long k) {
    return f1_adjustment(alpha, n, k) * family_denominator(family, n, k, alpha);
  };

  std::vector<Rational> xs, ys;
  xs.reserve(3 * n + 1);
  ys.reserve(3 * n + 1);
  for (long k = 0; k <= 3 * n; ++k) {
    xs.emplace_back(k);
    ys.push_back(value_at(k));
  }
  RationalPolynomial p = RationalPolynomial::interpolate(xs, ys);

  // A_n must be exactly degree 3n; verify on fresh nodes.
  if (p.degree() != 3 * n || p.eval(Rational(3 * n + 1)) != value_at(3 * n + 1) ||
      p.eval(Rational(3 * n + 2)) != value_at(3 * n + 2)) {
    throw std::runtime_error("numerator_polynomial: interpolation degree mismatch");
  }
  return p;
}

Rational leading_coefficient_rebit(long n, int depth) {
  if (depth < 0 || depth > 5) throw std::out_of_range("leading_coefficient_rebit: depth out of range");
  if (3 * n + 1 - depth < 1 || (depth >= 4 && n < 2))
    throw std::out_of_range("leading_coefficient_rebit: coefficient index out of range");
  const Rational nn(n);
  switch (depth) {
    case 0:
      return pow2(n);
    case 1:
      return Rational(3) * pow2(n - 1) * nn * (nn + Rational(2));
    case 2:
      return pow2(n - 3) * nn * (nn * (nn * (Rational(9) * nn + Rational(32)) + Rational(24)) - Rational(45));
    case 3:
      return pow2(n - 4) * nn *
             (nn * (nn * (nn * (Rational(9) * nn * nn + Rational(42) * nn + Rational(52)) - Rational(119)) -
                    Rational(52)) -
              Rational(60));
    case 4: {
      Rational p = Rational(135) * nn.pow(7) + Rational(855) * nn.pow(6) + Rational(1895) * nn.pow(5) -
                   Rational(1771) * nn.pow(4) - Rational(3091) * nn.pow(3) - Rational(7731) * nn.pow(2) +
                   Rational(32394) * nn;
      return Rational(1, 5) * pow2(n - 7) * (nn - Rational(1)) * p;
    }
    case 5: {
      Rational p =
          nn * (nn * (nn * (nn * (nn * (Rational(3) * nn * (Rational(3) * nn * (Rational(9) * nn + Rational(59)) +
                                                            Rational(377)) -
                                        Rational(2887)) -
                                  Rational(2295)) -
                            Rational(10535)) +
                      Rational(112240)) -
                Rational(181492)) +
          Rational(436720);
      return Rational(1, 5) * pow2(n - 8) * (nn - Rational(1)) * nn * p;
    }
  }
  throw std::logic_error("leading_coefficient_rebit: unreachable");
}

Rational sixbysix_adjustment(SixBySixKind kind, long n, long k) {
  if (k < 0) throw std::invalid_argument("sixbysix_adjustment: negative k");
  const Rational kk(k);
  if (kind == SixBySixKind::rebit_retrit && n == 1) {
    RationalPolynomial num({Rational(-1170), Rational(-1149), Rational(-220), Rational(95), Rational(40), Rational(4)});
    Rational den = Rational(576) * (kk + Rational(4)) * (Rational(3) * kk + Rational(11)) *
                   (Rational(3) * kk + Rational(13)) * (Rational(6) * kk + Rational(23)) *
                   (Rational(6) * kk + Rational(25));
    return num.eval(kk) / den;
  }
  if (kind == SixBySixKind::rebit_retrit && n == 2) {
    RationalPolynomial num({Rational(3715740), Rational(5620320), Rational(3316809), Rational(903539),
                            Rational(101979), Rational(12069), Rational(8496), Rational(2616), Rational(336),
                            Rational(16)});
    Rational den = Rational(331776) * (kk + Rational(5)) * (Rational(3) * kk + Rational(11)) *
                   (Rational(3) * kk + Rational(13)) * (Rational(3) * kk + Rational(14)) *
                   (Rational(3) * kk + Rational(16)) * (Rational(6) * kk + Rational(23)) *
                   (Rational(6) * kk + Rational(25)) * (Rational(6) * kk + Rational(29)) *
                   (Rational(6) * kk + Rational(31));
    return num.eval(kk) / den;
  }
  if (kind == SixBySixKind::qubit_qutrit && n == 1) {
    RationalPolynomial num({Rational(-3840), Rational(-2558), Rational(-423), Rational(37), Rational(15), Rational(1)});
    Rational den = Rational(72) * (Rational(2) * kk + Rational(13)) * (Rational(3) * kk + Rational(19)) *
                   (Rational(3) * kk + Rational(20)) * (Rational(6) * kk + Rational(37)) *
                   (Rational(6) * kk + Rational(41));
    return num.eval(kk) / den;
  }
  throw std::invalid_argument("sixbysix_adjustment: unsupported (kind, n) pair");
}

namespace {

Rational nongeneric_delta(long beta, long k) {
  Rational f = factorial(static_cast<unsigned long>(k));
  return f * f * f * pochhammer(Rational(1) + Rational(beta, 2), k) / pochhammer(Rational(4 + beta), 4 * k);
}

}  // namespace

Rational nongeneric_moment(long beta, long n, long k) {
  if (beta < 1) throw std::invalid_argument("nongeneric_moment: beta must be >= 1");
  if (n < 0 || k < 0) throw std::invalid_argument("nongeneric_moment: negative order");
  const Rational b2(beta, 2);
  const Rational kb = Rational(k + 1) + b2;  // k + 1 + beta/2
  Rational pre = nongeneric_delta(beta, k) * pochhammer(Rational(k + 1), n).pow(2) *
                 pochhammer(kb, n).pow(2) / pochhammer(Rational(4 + beta + 4 * k), 4 * n);
  Rational sum(0);
  for (long j = 0; j <= n; ++j) {
    Rational t = pochhammer(Rational(-n), j) * pochhammer(b2, j) * pochhammer(kb + Rational(n), j).pow(2);
    t /= factorial(static_cast<unsigned long>(j)) * pochhammer(Rational(-k - n), j).pow(2) * pochhammer(kb, j);
    sum += t;
  }
  return pre * sum;
}

Rational nongeneric_brute_oracle(long beta, long n, long k) {
  if (beta < 1) throw std::invalid_argument("nongeneric_brute_oracle: beta must be >= 1");
  if (n < 0 || k < 0) throw std::invalid_argument("nongeneric_brute_oracle: negative order");
  const Rational b2(beta, 2);
  Rational sum(0);
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) {
      Rational t = binomial(n, i) * binomial(n, j) * pochhammer(Rational(k + 1), n - j).pow(2) *
                   pochhammer(Rational(k + 1) + b2, n + j) * pochhammer(Rational(k + 1), n - i) *
                   pochhammer(b2, i + j);
      sum += (j % 2 == 0) ? t : -t;
    }
  }
  return nongeneric_delta(beta, k) * sum / pochhammer(Rational(4 + beta + 4 * k), 4 * n);
}

Rational transformed_unit_interval_factor(long k, int order) {
  if (k < 0) throw std::invalid_argument("transformed_unit_interval_factor: negative k");
  const Rational a = half();
  if (order == 1) {
    return (Rational(256) * f1_adjustment(a, 1, k) + Rational(16)) / Rational(17);
  }
  if (order == 2) {
    return (Rational(65536) * f1_adjustment(a, 2, k) + Rational(8192) * f1_adjustment(a, 1, k) +
            Rational(256)) /
           Rational(289);
  }
  throw std::invalid_argument("transformed_unit_interval_factor: order must be 1 or 2");
}

}  // namespace dml
