#include "dml/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace dml {

mpfr_prec_t BigReal::bits(int digits) {
  if (digits < 1) throw std::invalid_argument("BigReal: precision must be positive");
  // 3.322 bits per decimal digit plus guard bits.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

BigReal BigReal::to_digits(int digits) const {
  BigReal r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::binop(const BigReal& a, const BigReal& b, mpfr_fn f) {
  BigReal r(std::max(a.digits_, b.digits_));
  f(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::assignop(const BigReal& o, mpfr_fn f) {
  if (o.digits_ > digits_) {
    BigReal tmp = binop(*this, o, f);
    *this = std::move(tmp);
  } else {
    f(v_, v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal BigReal::sqrt() const {
  if (sign() < 0) throw std::domain_error("BigReal: sqrt of negative value");
  BigReal r(digits_);
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow10(long e, int digits) {
  BigReal r(digits);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

std::string BigReal::str(int out_digits) const {
  if (out_digits < 0) out_digits = digits_;
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (is_zero()) return "0";

  mpfr_exp_t exp;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(out_digits), v_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string sign_str;
  if (!digits.empty() && digits[0] == '-') {
    sign_str = "-";
    digits.erase(0, 1);
  }
  // Trim trailing zeros but keep at least one digit.
  std::size_t last = digits.find_last_not_of('0');
  digits.erase(last + 1);
  if (digits.empty()) digits = "0";

  // Fixed-point form for moderate exponents, scientific otherwise.
  std::string out;
  if (exp > 0 && exp <= 40) {
    if (static_cast<std::size_t>(exp) >= digits.size()) {
      out = digits + std::string(exp - digits.size(), '0');
    } else {
      out = digits.substr(0, exp) + "." + digits.substr(exp);
    }
  } else if (exp <= 0 && exp > -8) {
    out = "0." + std::string(-exp, '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(exp - 1);
  }
  return sign_str + out;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.str(); }

}  // namespace dml
