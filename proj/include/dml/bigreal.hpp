#ifndef DML_BIGREAL_HPP
#define DML_BIGREAL_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "dml/rational.hpp"

namespace dml {

/// Arbitrary-precision floating value with an explicit decimal-digit
/// precision. Binary operations run at the larger precision of the operands;
/// rounding is to nearest.
class BigReal {
 public:
  static constexpr int kMinDigits = 16;

  explicit BigReal(int digits = 64) : digits_(digits) { mpfr_init2(v_, bits(digits)); mpfr_set_zero(v_, 1); }
  BigReal(const Rational& q, int digits) : digits_(digits) {
    mpfr_init2(v_, bits(digits));
    mpfr_set_q(v_, q.raw(), MPFR_RNDN);
  }
  BigReal(double x, int digits) : digits_(digits) {
    mpfr_init2(v_, bits(digits));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigReal(long n, int digits) : digits_(digits) {
    mpfr_init2(v_, bits(digits));
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  BigReal(const BigReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  ~BigReal() { mpfr_clear(v_); }

  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;

  int digits() const { return digits_; }

  /// Same value rounded to a new stated precision.
  BigReal to_digits(int digits) const;

  friend BigReal operator+(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_add); }
  friend BigReal operator-(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_sub); }
  friend BigReal operator*(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_mul); }
  friend BigReal operator/(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_div); }
  BigReal& operator+=(const BigReal& o) { return assignop(o, mpfr_add); }
  BigReal& operator-=(const BigReal& o) { return assignop(o, mpfr_sub); }
  BigReal& operator*=(const BigReal& o) { return assignop(o, mpfr_mul); }
  BigReal& operator/=(const BigReal& o) { return assignop(o, mpfr_div); }
  BigReal operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

  BigReal abs() const {
    BigReal r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  BigReal sqrt() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal string with the given number of significant digits
  /// (defaults to the stated precision).
  std::string str(int out_digits = -1) const;

  /// 10^-e as a convenience tolerance value.
  static BigReal pow10(long e, int digits);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  static mpfr_prec_t bits(int digits);

 private:
  using mpfr_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigReal binop(const BigReal& a, const BigReal& b, mpfr_fn f);
  BigReal& assignop(const BigReal& o, mpfr_fn f);

  mpfr_t v_;
  int digits_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

}  // namespace dml

#endif
