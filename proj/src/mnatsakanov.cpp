#include "dml/mnatsakanov.hpp"

#include <stdexcept>

namespace dml {

std::vector<Rational> mnatsakanov_cdf_coefficients(const MomentSequence& ms, long M) {
  if (M < 1 || M > ms.order())
    throw std::invalid_argument("mnatsakanov: recovery order exceeds available moments");
  std::vector<Rational> b(static_cast<std::size_t>(M) + 1, Rational(0));
  for (long k = 0; k <= M; ++k) {
    // C(M,j) C(j,k) = C(M,k) C(M-k, j-k)
    Rational s(0);
    for (long j = k; j <= M; ++j) {
      Rational t = binomial(static_cast<unsigned long>(M - k), static_cast<unsigned long>(j - k)) *
                   ms.mu[static_cast<std::size_t>(j)];
      s += ((j - k) % 2 == 0) ? t : -t;
    }
    b[static_cast<std::size_t>(k)] = binomial(static_cast<unsigned long>(M), static_cast<unsigned long>(k)) * s;
  }
  return b;
}

BigReal mnatsakanov_cdf(const MomentSequence& ms, long M, const Rational& x, int digits) {
  if (x < Rational(0) || x > Rational(1))
    throw std::invalid_argument("mnatsakanov_cdf: x outside [0,1]");
  const auto b = mnatsakanov_cdf_coefficients(ms, M);
  const long top = (Rational(M) * x).to_long();  // floor(M x); arguments are nonnegative
  Rational f(0);
  for (long k = 0; k <= top && k <= M; ++k) f += b[static_cast<std::size_t>(k)];
  return BigReal(f, digits);
}

std::vector<BigReal> mnatsakanov_density(const MomentSequence& ms, long M, int digits) {
  const auto b = mnatsakanov_cdf_coefficients(ms, M);
  std::vector<BigReal> d;
  d.reserve(b.size());
  for (const auto& bk : b) d.emplace_back(Rational(M) * bk, digits);
  return d;
}

BigReal mnatsakanov_tail(const MomentSequence& ms, long M, const Rational& tstar, int digits) {
  return BigReal(1L, digits) - mnatsakanov_cdf(ms, M, tstar, digits);
}

}  // namespace dml
