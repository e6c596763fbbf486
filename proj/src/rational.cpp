#include "dml/rational.hpp"

#include <cctype>
#include <ostream>

namespace dml {

Rational Rational::from_string(std::string_view s) {
  std::string t(s);
  for (char c : t) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("Rational: bad literal '" + t + "'");
  }
  Rational r;
  if (mpq_set_str(r.q_, t.c_str(), 10) != 0)
    throw std::invalid_argument("Rational: bad literal '" + t + "'");
  if (mpz_sgn(mpq_denref(r.q_)) == 0) throw std::domain_error("Rational: zero denominator");
  mpq_canonicalize(r.q_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw std::domain_error("Rational: 0^negative");
  Rational r;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), a);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), a);
  if (e < 0) mpq_inv(r.q_, r.q_);
  mpq_canonicalize(r.q_);
  return r;
}

std::string Rational::str() const {
  char* c = mpq_get_str(nullptr, 10, q_);
  std::string s(c);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(c, s.size() + 1);
  return s;
}

std::string Rational::numerator_str() const {
  char* c = mpz_get_str(nullptr, 10, mpq_numref(q_));
  std::string s(c);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(c, s.size() + 1);
  return s;
}

std::string Rational::denominator_str() const {
  char* c = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string s(c);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(c, s.size() + 1);
  return s;
}

long Rational::to_long() const {
  mpz_t z;
  mpz_init(z);
  mpz_tdiv_q(z, mpq_numref(q_), mpq_denref(q_));
  if (!mpz_fits_slong_p(z)) {
    mpz_clear(z);
    throw std::overflow_error("Rational: value does not fit in long");
  }
  long v = mpz_get_si(z);
  mpz_clear(z);
  return v;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational factorial(unsigned long n) {
  Rational r(1);
  mpz_fac_ui(mpq_numref(r.raw()), n);
  return r;
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  Rational r(1);
  mpz_bin_uiui(mpq_numref(r.raw()), n, k);
  return r;
}

Rational pow2(long e) { return Rational(2).pow(e); }

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending_coeffs)
    : c_(std::move(ascending_coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::interpolate(const std::vector<Rational>& xs,
                                                   const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("interpolate: mismatched or empty node lists");
  const std::size_t m = xs.size();

  // Newton divided differences.
  std::vector<Rational> coef(ys);
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = m - 1; i >= j; --i) {
      Rational dx = xs[i] - xs[i - j];
      if (dx.is_zero()) throw std::invalid_argument("interpolate: repeated node");
      coef[i] = (coef[i] - coef[i - 1]) / dx;
      if (i == j) break;
    }
  }

  // Expand the Newton form into monomial coefficients.
  std::vector<Rational> poly(m, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // prod_{l<j} (x - x_l)
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += coef[j] * basis[i];
    if (j + 1 < m) {
      basis.emplace_back(0);
      for (std::size_t i = basis.size() - 1; i > 0; --i) {
        basis[i] = basis[i - 1] - xs[j] * basis[i];
      }
      basis[0] = -xs[j] * basis[0];
    }
  }
  return RationalPolynomial(std::move(poly));
}

}  // namespace dml
