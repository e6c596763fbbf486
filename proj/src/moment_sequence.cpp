#include "dml/moment_sequence.hpp"

#include <algorithm>
#include <stdexcept>

#include "dml/bigreal.hpp"

namespace dml {

std::string to_string(SequenceVariable v) {
  switch (v) {
    case SequenceVariable::det:
      return "det";
    case SequenceVariable::ptdet:
      return "ptdet";
    case SequenceVariable::product:
      return "product";
  }
  return "?";
}

SequenceVariable sequence_variable_from_string(const std::string& s) {
  if (s == "det") return SequenceVariable::det;
  if (s == "ptdet") return SequenceVariable::ptdet;
  if (s == "product") return SequenceVariable::product;
  throw std::invalid_argument("unknown variable '" + s + "'");
}

void variable_range(SequenceVariable v, Rational& lo, Rational& hi, std::optional<Rational>& tstar) {
  switch (v) {
    case SequenceVariable::ptdet:
      lo = Rational(-1, 16);
      hi = Rational(1, 256);
      tstar = Rational(16, 17);
      return;
    case SequenceVariable::product:
      lo = Rational(-1, 110592);
      hi = Rational(1, 65536);
      tstar = Rational(16, 43);
      return;
    case SequenceVariable::det:
      lo = Rational(0);
      hi = Rational(1, 256);
      tstar.reset();
      return;
  }
  throw std::logic_error("variable_range: bad variable");
}

namespace {

// Cholesky positivity probe of the (m+1)x(m+1) Hankel matrix at `digits`.
bool hankel_posdef(const std::vector<Rational>& mu, long m, int digits) {
  const long n = m + 1;
  std::vector<BigReal> a(static_cast<std::size_t>(n * n), BigReal(digits));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i * n + j)] = BigReal(mu[static_cast<std::size_t>(i + j)], digits);
  for (long c = 0; c < n; ++c) {
    for (long r = c; r < n; ++r) {
      BigReal s = a[static_cast<std::size_t>(r * n + c)];
      for (long t = 0; t < c; ++t)
        s -= a[static_cast<std::size_t>(r * n + t)] * a[static_cast<std::size_t>(c * n + t)];
      if (r == c) {
        if (s.sign() <= 0) return false;
        a[static_cast<std::size_t>(c * n + c)] = s.sqrt();
      } else {
        a[static_cast<std::size_t>(r * n + c)] = s / a[static_cast<std::size_t>(c * n + c)];
      }
    }
  }
  return true;
}

}  // namespace

long hankel_positive_order(const std::vector<Rational>& mu, long max_order, int digits) {
  long ok = -1;
  for (long m = 0; m <= max_order; ++m) {
    if (2 * m >= static_cast<long>(mu.size())) break;
    if (!hankel_posdef(mu, m, digits)) break;
    ok = m;
  }
  return ok;
}

MomentSequence build_moment_sequence(const Rational& alpha, SequenceVariable variable, long N,
                                     int digits) {
  if (N < 1) throw std::invalid_argument("build_moment_sequence: N must be >= 1");
  MomentSequence ms;
  ms.variable = variable;
  ms.alpha = alpha;
  variable_range(variable, ms.lo, ms.hi, ms.threshold);

  std::vector<Rational> raw;
  switch (variable) {
    case SequenceVariable::ptdet:
      raw = pt_moment_sequence(alpha, N);
      break;
    case SequenceVariable::product:
      raw = product_moment_sequence(alpha, N);
      break;
    case SequenceVariable::det:
      raw = det_moment_sequence(alpha, N);
      break;
  }

  // T = (V - a)/(b - a); <T^i> by exact binomial expansion.
  const Rational span = ms.hi - ms.lo;
  const Rational neg_a = -ms.lo;
  ms.mu.assign(static_cast<std::size_t>(N) + 1, Rational(0));
  ms.mu[0] = Rational(1);
  std::vector<Rational> neg_a_pow(static_cast<std::size_t>(N) + 1);
  neg_a_pow[0] = Rational(1);
  for (long i = 1; i <= N; ++i) neg_a_pow[static_cast<std::size_t>(i)] = neg_a_pow[static_cast<std::size_t>(i - 1)] * neg_a;
  Rational span_pow(1);
  for (long i = 1; i <= N; ++i) {
    span_pow *= span;
    Rational s(0);
    for (long j = 0; j <= i; ++j) {
      s += binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j)) *
           raw[static_cast<std::size_t>(j)] * neg_a_pow[static_cast<std::size_t>(i - j)];
    }
    ms.mu[static_cast<std::size_t>(i)] = s / span_pow;
  }

  // Positivity audit on a leading Hankel block; raise precision before
  // declaring the sequence invalid.
  const long audit = std::min<long>(N / 2, 16);
  if (audit >= 1) {
    int d = std::max(digits, 64);
    bool ok = false;
    for (int attempt = 0; attempt < 3 && !ok; ++attempt, d *= 2)
      ok = hankel_positive_order(ms.mu, audit, d) == audit;
    if (!ok)
      throw std::runtime_error("build_moment_sequence: Hankel positivity failure (invalid moment sequence)");
  }
  return ms;
}

MomentSequence make_moment_sequence(SequenceVariable variable, const Rational& alpha,
                                    std::vector<Rational> rescaled_moments) {
  if (rescaled_moments.empty() || rescaled_moments[0] != Rational(1))
    throw std::invalid_argument("make_moment_sequence: mu_0 must be 1");
  MomentSequence ms;
  ms.variable = variable;
  ms.alpha = alpha;
  variable_range(variable, ms.lo, ms.hi, ms.threshold);
  ms.mu = std::move(rescaled_moments);
  return ms;
}

}  // namespace dml
