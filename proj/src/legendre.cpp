#include "dml/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dml/mnatsakanov.hpp"
#include "dml/quadrature.hpp"

namespace dml {

int legendre_working_digits(long N, int digits) {
  // The moment-to-coefficient map amplifies roundoff like (3 + 2 sqrt(2))^N,
  // i.e. about 0.7656 decimal digits per order.
  return digits + static_cast<int>(std::ceil(0.7656 * static_cast<double>(N))) + 48;
}

std::vector<Rational> shifted_legendre_coefficients(long j) {
  if (j < 0) throw std::invalid_argument("shifted_legendre_coefficients: negative order");
  // (j+1) Pt_{j+1} = (2j+1)(2x-1) Pt_j - j Pt_{j-1}
  std::vector<Rational> prev{Rational(1)};
  if (j == 0) return prev;
  std::vector<Rational> cur{Rational(-1), Rational(2)};
  for (long m = 1; m < j; ++m) {
    std::vector<Rational> next(cur.size() + 1, Rational(0));
    const Rational c(2 * m + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += Rational(2) * c * cur[i];
      next[i] -= c * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= Rational(m) * prev[i];
    const Rational inv(1, m + 1);
    for (auto& x : next) x *= inv;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// lambda_j = <Pt_j> for j = 0..N via the rolling recurrence on the modified
// moments nu_{j,i} = <x^i Pt_j>:
//   nu_{j+1,i} = ((2j+1)(2 nu_{j,i+1} - nu_{j,i}) - j nu_{j-1,i}) / (j+1).
std::vector<BigReal> lambda_recurrence(const std::vector<Rational>& mu, long N, int wd) {
  std::vector<BigReal> lambda;
  lambda.reserve(static_cast<std::size_t>(N) + 1);
  std::vector<BigReal> prev, cur;
  prev.reserve(static_cast<std::size_t>(N) + 1);
  for (long i = 0; i <= N; ++i) prev.emplace_back(mu[static_cast<std::size_t>(i)], wd);
  lambda.push_back(prev[0]);
  if (N >= 1) {
    cur.reserve(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i) {
      BigReal v = prev[static_cast<std::size_t>(i + 1)];
      v += v;
      v -= prev[static_cast<std::size_t>(i)];
      cur.push_back(std::move(v));
    }
    lambda.push_back(cur[0]);
    for (long j = 1; j < N; ++j) {
      std::vector<BigReal> next;
      next.reserve(cur.size() - 1);
      const BigReal cj(2 * j + 1, wd);
      const BigReal jj(j, wd);
      const BigReal j1(j + 1, wd);
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        BigReal t = cur[i + 1];
        t += t;
        t -= cur[i];
        t *= cj;
        t -= jj * prev[i];
        t /= j1;
        next.push_back(std::move(t));
      }
      prev = std::move(cur);
      cur = std::move(next);
      lambda.push_back(cur[0]);
    }
  }
  return lambda;
}

}  // namespace

DensityApprox legendre_coefficients(const MomentSequence& ms, long N, int digits) {
  if (N < 0 || N > ms.order())
    throw std::invalid_argument("legendre_coefficients: order exceeds available moments");
  if (digits < BigReal::kMinDigits)
    throw std::invalid_argument("legendre_coefficients: precision below minimum");

  const int wd = legendre_working_digits(N, digits);
  DensityApprox da;
  da.order = static_cast<int>(N);
  da.digits = digits;
  da.working_digits = wd;
  da.lambda = lambda_recurrence(ms.mu, N, wd);

  const BigReal tol = BigReal::pow10(-(digits - 8), 32);

  // Cancellation diagnostic, exact rational route for the low orders.
  const long jmax = std::min<long>(N, 50);
  for (long j = 0; j <= jmax; ++j) {
    const auto coeffs = shifted_legendre_coefficients(j);
    Rational exact(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) exact += coeffs[i] * ms.mu[i];
    if ((da.lambda[static_cast<std::size_t>(j)] - BigReal(exact, wd)).abs() > tol) {
      throw std::runtime_error(
          "legendre_coefficients: cancellation diagnostic failed at order " + std::to_string(j) +
          "; raise the precision");
    }
  }

  // High orders are beyond the exact route's reach; rerun the recurrence at
  // a stepped-up precision and require agreement across the whole range,
  // which bounds the amplified roundoff of the lower-precision pass.
  if (N > jmax) {
    const auto check = lambda_recurrence(ms.mu, N, wd + 32);
    for (long j = 0; j <= N; ++j) {
      if ((da.lambda[static_cast<std::size_t>(j)] - check[static_cast<std::size_t>(j)]).abs() > tol) {
        throw std::runtime_error(
            "legendre_coefficients: precision verification failed at order " + std::to_string(j) +
            "; raise the precision");
      }
    }
  }
  return da;
}

namespace {

// Pt_0(x) .. Pt_{N+1}(x) by the three-term recurrence.
std::vector<BigReal> shifted_legendre_values(const BigReal& x, long top) {
  std::vector<BigReal> p;
  p.reserve(static_cast<std::size_t>(top) + 1);
  const BigReal t = BigReal(2L, x.digits()) * x - BigReal(1L, x.digits());
  p.emplace_back(BigReal(1L, x.digits()));
  if (top >= 1) p.push_back(t);
  for (long j = 1; j < top; ++j) {
    BigReal v = (BigReal(2 * j + 1, x.digits()) * t * p[static_cast<std::size_t>(j)] -
                 BigReal(j, x.digits()) * p[static_cast<std::size_t>(j - 1)]) /
                BigReal(j + 1, x.digits());
    p.push_back(std::move(v));
  }
  return p;
}

}  // namespace

BigReal density_value(const DensityApprox& da, const BigReal& x) {
  const int wd = da.working_digits;
  const auto p = shifted_legendre_values(x.to_digits(wd), da.order);
  BigReal s(0L, wd);
  for (long j = 0; j <= da.order; ++j)
    s += BigReal(2 * j + 1, wd) * da.lambda[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
  return s.to_digits(da.digits);
}

BigReal tail_probability(const DensityApprox& da, const Rational& tstar) {
  if (tstar < Rational(0) || tstar > Rational(1))
    throw std::invalid_argument("tail_probability: threshold outside [0,1]");
  const int wd = da.working_digits;
  const BigReal t(tstar, wd);
  const long N = da.order;
  const auto p = shifted_legendre_values(t, N + 1);

  // integral_{t*}^1 Pt_j = (Pt_{j-1}(t*) - Pt_{j+1}(t*)) / (2 (2j+1)), j >= 1,
  // from the exact antiderivative (Pt_{j+1} - Pt_{j-1}) / (2 (2j+1)).
  BigReal tail = da.lambda[0] * (BigReal(1L, wd) - t);
  const BigReal half(Rational(1, 2), wd);
  for (long j = 1; j <= N; ++j) {
    tail += da.lambda[static_cast<std::size_t>(j)] *
            (p[static_cast<std::size_t>(j - 1)] - p[static_cast<std::size_t>(j + 1)]) * half;
  }
  return tail.to_digits(da.digits);
}

std::string to_string(ReconstructionMethod m) {
  switch (m) {
    case ReconstructionMethod::legendre:
      return "legendre";
    case ReconstructionMethod::mnatsakanov:
      return "mnatsakanov";
    case ReconstructionMethod::quadrature:
      return "quadrature";
  }
  return "?";
}

ReconstructionMethod reconstruction_method_from_string(const std::string& s) {
  if (s == "legendre") return ReconstructionMethod::legendre;
  if (s == "mnatsakanov") return ReconstructionMethod::mnatsakanov;
  if (s == "quadrature") return ReconstructionMethod::quadrature;
  throw std::invalid_argument("unknown method '" + s + "'");
}

EstimateRecord separability_estimate(const Rational& alpha, SequenceVariable variable, long N,
                                     int digits, ReconstructionMethod method) {
  if (variable == SequenceVariable::det)
    throw std::invalid_argument("separability_estimate: variable must carry a threshold");
  EstimateRecord rec;
  rec.alpha = alpha;
  rec.variable = variable;
  rec.n_moments = N;
  rec.precision_digits = digits;
  rec.method = to_string(method);

  switch (method) {
    case ReconstructionMethod::legendre: {
      MomentSequence ms = build_moment_sequence(alpha, variable, N, digits);
      rec.threshold = *ms.threshold;
      DensityApprox da = legendre_coefficients(ms, N, digits);
      rec.estimate = tail_probability(da, rec.threshold);
      break;
    }
    case ReconstructionMethod::mnatsakanov: {
      MomentSequence ms = build_moment_sequence(alpha, variable, N, digits);
      rec.threshold = *ms.threshold;
      rec.estimate = mnatsakanov_tail(ms, N, rec.threshold, digits);
      break;
    }
    case ReconstructionMethod::quadrature: {
      MomentSequence ms = build_moment_sequence(alpha, variable, 2 * N + 1, digits);
      rec.threshold = *ms.threshold;
      QuadratureRule rule = gauss_rule(ms, static_cast<int>(N), digits);
      rec.estimate = quadrature_threshold_probability(rule, rec.threshold);
      break;
    }
  }
  return rec;
}

}  // namespace dml
