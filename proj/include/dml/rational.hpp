#ifndef DML_RATIONAL_HPP
#define DML_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dml {

/// Arbitrary-precision signed rational, always stored in lowest terms with a
/// positive denominator. Arithmetic is exact; division by zero throws.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(int n) : Rational(static_cast<long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set_si(mpq_numref(q_), num);
    mpz_set_si(mpq_denref(q_), den);
    mpq_canonicalize(q_);  // also normalizes the denominator sign
  }
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  ~Rational() { mpq_clear(q_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }

  /// Parses "p", "p/q", or a plain decimal integer with optional sign.
  static Rational from_string(std::string_view s);

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  /// Integer power; negative exponents require a nonzero value.
  Rational pow(long e) const;

  double to_double() const { return mpq_get_d(q_); }

  /// Exact "p/q" form ("p" when the denominator is 1).
  std::string str() const;

  /// Numerator as decimal string (signed).
  std::string numerator_str() const;
  std::string denominator_str() const;

  /// Rounds toward zero to a long; throws if out of range.
  long to_long() const;

  const __mpq_struct* raw() const { return q_; }
  __mpq_struct* raw() { return q_; }

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// n! as an exact rational.
Rational factorial(unsigned long n);

/// Binomial coefficient C(n, k), exact.
Rational binomial(unsigned long n, unsigned long k);

/// 2^e for any integer e (negative gives the exact reciprocal).
Rational pow2(long e);

/// Dense polynomial with exact rational coefficients, ascending by power.
/// The top coefficient is nonzero unless the polynomial is identically zero.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending_coeffs);

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }

  /// Coefficient of x^i (0 beyond the stored degree).
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational eval(const Rational& x) const;

  /// Unique interpolating polynomial through the given (x, y) pairs.
  /// The abscissae must be pairwise distinct.
  static RationalPolynomial interpolate(const std::vector<Rational>& xs,
                                        const std::vector<Rational>& ys);

 private:
  std::vector<Rational> c_;
};

}  // namespace dml

#endif
