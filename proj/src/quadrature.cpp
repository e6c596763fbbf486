#include "dml/quadrature.hpp"

#include <algorithm>
#include <stdexcept>

namespace dml {

namespace {

struct Tridiag {
  std::vector<BigReal> a;  // diagonal
  std::vector<BigReal> b;  // squared off-diagonals, b[0] unused
  std::vector<BigReal> h;  // norms h_0..h_n
};

// Cholesky factor (upper R, row-major) of the (n+1)x(n+1) Hankel matrix.
// Returns false if a pivot fails to be positive.
bool hankel_cholesky(const std::vector<Rational>& mu, int n, int wd, std::vector<BigReal>& r) {
  const int m = n + 1;
  r.assign(static_cast<std::size_t>(m) * m, BigReal(0L, wd));
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      BigReal s(mu[static_cast<std::size_t>(i + j)], wd);
      for (int t = 0; t < i; ++t)
        s -= r[static_cast<std::size_t>(t) * m + i] * r[static_cast<std::size_t>(t) * m + j];
      if (i == j) {
        if (s.sign() <= 0) return false;
        r[static_cast<std::size_t>(i) * m + i] = s.sqrt();
      } else {
        r[static_cast<std::size_t>(i) * m + j] = s / r[static_cast<std::size_t>(i) * m + i];
      }
    }
  }
  return true;
}

// Three-term recurrence coefficients (monic) from the Hankel Cholesky factor:
// a_j = r_{j,j+1}/r_{j,j} - r_{j-1,j}/r_{j-1,j-1},  b_j = (r_{j,j}/r_{j-1,j-1})^2.
bool recurrence_from_cholesky(const std::vector<Rational>& mu, int n, int wd, Tridiag& td) {
  std::vector<BigReal> r;
  if (!hankel_cholesky(mu, n, wd, r)) return false;
  const int m = n + 1;
  auto rr = [&](int i, int j) -> const BigReal& { return r[static_cast<std::size_t>(i) * m + j]; };
  td.a.clear();
  td.b.clear();
  td.h.clear();
  for (int j = 0; j < n; ++j) {
    BigReal v = rr(j, j + 1) / rr(j, j);
    if (j > 0) v -= rr(j - 1, j) / rr(j - 1, j - 1);
    td.a.push_back(std::move(v));
  }
  td.b.emplace_back(0L, wd);
  for (int j = 1; j < n; ++j) {
    BigReal q = rr(j, j) / rr(j - 1, j - 1);
    td.b.push_back(q * q);
  }
  for (int j = 0; j <= n; ++j) td.h.push_back(rr(j, j) * rr(j, j));
  return true;
}

// Moment-based recurrence algorithm (sigma table): the classical
// ill-conditioned route, kept as a cross-check behind a flag.
bool recurrence_from_moments(const std::vector<Rational>& mu, int n, int wd, Tridiag& td) {
  const long cols = 2 * n;
  std::vector<BigReal> prev(cols + 1, BigReal(0L, wd));  // sigma_{-1}
  std::vector<BigReal> cur;                              // sigma_0
  cur.reserve(cols + 1);
  for (long l = 0; l <= cols; ++l) cur.emplace_back(mu[static_cast<std::size_t>(l)], wd);

  td.a.assign(1, cur[1] / cur[0]);
  td.b.assign(1, BigReal(0L, wd));
  td.h.assign(1, cur[0]);
  for (int j = 1; j < n; ++j) {
    std::vector<BigReal> next(cols + 1, BigReal(0L, wd));
    for (long l = j; l <= cols - j; ++l) {
      next[static_cast<std::size_t>(l)] =
          cur[static_cast<std::size_t>(l + 1)] - td.a[static_cast<std::size_t>(j - 1)] * cur[static_cast<std::size_t>(l)];
      if (j > 1)
        next[static_cast<std::size_t>(l)] -= td.b[static_cast<std::size_t>(j - 1)] * prev[static_cast<std::size_t>(l)];
    }
    if (next[static_cast<std::size_t>(j)].sign() <= 0) return false;
    td.b.push_back(next[static_cast<std::size_t>(j)] / cur[static_cast<std::size_t>(j - 1)]);
    td.a.push_back(next[static_cast<std::size_t>(j + 1)] / next[static_cast<std::size_t>(j)] -
                   cur[static_cast<std::size_t>(j)] / cur[static_cast<std::size_t>(j - 1)]);
    td.h.push_back(next[static_cast<std::size_t>(j)]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  // h_n completes the table (only n entries of a/b are needed for n nodes).
  {
    std::vector<BigReal> next(cols + 1, BigReal(0L, wd));
    const long l = n;
    if (n >= 1) {
      next[static_cast<std::size_t>(l)] =
          cur[static_cast<std::size_t>(l + 1)] - td.a[static_cast<std::size_t>(n - 1)] * cur[static_cast<std::size_t>(l)];
      if (n > 1)
        next[static_cast<std::size_t>(l)] -= td.b[static_cast<std::size_t>(n - 1)] * prev[static_cast<std::size_t>(l)];
      if (next[static_cast<std::size_t>(l)].sign() <= 0) return false;
      td.h.push_back(next[static_cast<std::size_t>(l)]);
    }
  }
  return true;
}

// Monic coefficient rows P_0..P_n from the recurrence
// P_{j+1} = (x - a_j) P_j - b_j P_{j-1}.
std::vector<std::vector<BigReal>> monic_rows(const Tridiag& td, int n, int wd) {
  std::vector<std::vector<BigReal>> p;
  p.push_back({BigReal(1L, wd)});
  for (int j = 0; j < n; ++j) {
    const auto& pj = p[static_cast<std::size_t>(j)];
    std::vector<BigReal> nxt(pj.size() + 1, BigReal(0L, wd));
    for (std::size_t i = 0; i < pj.size(); ++i) {
      nxt[i + 1] += pj[i];
      nxt[i] -= td.a[static_cast<std::size_t>(j)] * pj[i];
    }
    if (j > 0) {
      const auto& pm = p[static_cast<std::size_t>(j - 1)];
      for (std::size_t i = 0; i < pm.size(); ++i) nxt[i] -= td.b[static_cast<std::size_t>(j)] * pm[i];
    }
    p.push_back(std::move(nxt));
  }
  return p;
}

BigReal horner(const std::vector<BigReal>& coeffs, const BigReal& x, int wd) {
  BigReal acc(0L, wd);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

// Number of eigenvalues of the Jacobi matrix strictly below x (Sturm count
// via the LDL^T pivots of J - xI).
int sturm_count(const Tridiag& td, int n, const BigReal& x, int wd) {
  int cnt = 0;
  BigReal d(0L, wd);
  const BigReal tiny = BigReal::pow10(-(2 * wd), wd);
  for (int i = 0; i < n; ++i) {
    BigReal v = td.a[static_cast<std::size_t>(i)] - x;
    if (i > 0) v -= td.b[static_cast<std::size_t>(i)] / d;
    if (v.is_zero()) v = -tiny;
    if (v.sign() < 0) ++cnt;
    d = std::move(v);
  }
  return cnt;
}

// All n eigenvalues by bisection, ascending.
std::vector<BigReal> jacobi_eigenvalues(const Tridiag& td, int n, int wd) {
  // Gershgorin bounds.
  std::vector<BigReal> offs;  // |off-diagonal| entries
  offs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) offs.push_back(td.b[static_cast<std::size_t>(i)].sqrt());
  BigReal lo = td.a[0], hi = td.a[0];
  for (int i = 0; i < n; ++i) {
    BigReal rad(0L, wd);
    if (i > 0) rad += offs[static_cast<std::size_t>(i - 1)];
    if (i + 1 < n) rad += offs[static_cast<std::size_t>(i)];
    lo = std::min(lo, td.a[static_cast<std::size_t>(i)] - rad);
    hi = std::max(hi, td.a[static_cast<std::size_t>(i)] + rad);
  }
  const BigReal width = hi - lo;
  const BigReal tol = width * BigReal::pow10(-wd + 4, wd);

  std::vector<BigReal> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int idx = 0; idx < n; ++idx) {
    BigReal a = lo, b = hi;
    while ((b - a) > tol) {
      BigReal mid = (a + b) * BigReal(Rational(1, 2), wd);
      if (sturm_count(td, n, mid, wd) > idx)
        b = std::move(mid);
      else
        a = std::move(mid);
    }
    out.push_back((a + b) * BigReal(Rational(1, 2), wd));
  }
  return out;
}

}  // namespace

BigReal QuadratureRule::max_abs_eps() const {
  BigReal m(0L, digits);
  for (const auto& e : eps) m = std::max(m, e.abs());
  return m;
}

BigReal QuadratureRule::raw_node(std::size_t i, const Rational& scale) const {
  const int wd = nodes[i].digits();
  return (BigReal(lo, wd) + nodes[i] * BigReal(hi - lo, wd)) * BigReal(scale, wd);
}

std::pair<std::vector<BigReal>, BigReal> monic_orthopoly(const MomentSequence& ms, int n,
                                                         int digits) {
  if (n < 1 || 2 * n > ms.order())
    throw std::invalid_argument("monic_orthopoly: order needs moments up to 2n");
  int wd = std::max(digits, 64);
  for (int attempt = 0; attempt < 6; ++attempt, wd *= 2) {
    // Solve sum_i a_i mu_{i+j} = -mu_{j+n}, j = 0..n-1 by Cholesky.
    std::vector<BigReal> r;
    if (!hankel_cholesky(ms.mu, n - 1, wd, r)) continue;
    const int m = n;
    auto rr = [&](int i, int j) -> const BigReal& { return r[static_cast<std::size_t>(i) * m + j]; };
    std::vector<BigReal> rhs;
    rhs.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) rhs.emplace_back(-ms.mu[static_cast<std::size_t>(j + n)], wd);
    // Forward then backward substitution with R^T R.
    for (int i = 0; i < n; ++i) {
      for (int t = 0; t < i; ++t) rhs[static_cast<std::size_t>(i)] -= rr(t, i) * rhs[static_cast<std::size_t>(t)];
      rhs[static_cast<std::size_t>(i)] /= rr(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
      for (int t = i + 1; t < n; ++t) rhs[static_cast<std::size_t>(i)] -= rr(i, t) * rhs[static_cast<std::size_t>(t)];
      rhs[static_cast<std::size_t>(i)] /= rr(i, i);
    }
    BigReal hn(ms.mu[static_cast<std::size_t>(2 * n)], wd);
    for (int i = 0; i < n; ++i) hn += rhs[static_cast<std::size_t>(i)] * BigReal(ms.mu[static_cast<std::size_t>(i + n)], wd);
    if (hn.sign() <= 0) continue;
    return {std::move(rhs), std::move(hn)};
  }
  throw std::runtime_error("monic_orthopoly: Hankel factorization failed at the precision cap");
}

QuadratureRule gauss_rule(const MomentSequence& ms, int n, int digits, bool recurrence_route) {
  if (n < 1 || 2 * n > ms.order())
    throw std::invalid_argument("gauss_rule: order needs moments up to 2n");
  if (digits < BigReal::kMinDigits) throw std::invalid_argument("gauss_rule: precision below minimum");

  const BigReal tol_scale = BigReal::pow10(-(digits / 2), digits);
  int wd = std::max(digits, 64) + 4 * n;
  for (int attempt = 0; attempt < 6; ++attempt, wd *= 2) {
    Tridiag td;
    const bool ok = recurrence_route ? recurrence_from_moments(ms.mu, n, wd, td)
                                     : recurrence_from_cholesky(ms.mu, n, wd, td);
    if (!ok) continue;

    QuadratureRule rule;
    rule.order = n;
    rule.digits = digits;
    rule.working_digits = wd;
    rule.lo = ms.lo;
    rule.hi = ms.hi;
    rule.nodes = jacobi_eigenvalues(td, n, wd);
    rule.h.assign(td.h.begin(), td.h.begin() + n);

    const auto rows = monic_rows(td, n, wd);
    const auto& pn = rows[static_cast<std::size_t>(n)];
    const auto& pnm1 = rows[static_cast<std::size_t>(n - 1)];
    std::vector<BigReal> dpn;  // P_n'
    dpn.reserve(pn.size() - 1);
    for (std::size_t i = 1; i < pn.size(); ++i) dpn.push_back(BigReal(static_cast<long>(i), wd) * pn[i]);

    rule.weights.clear();
    bool weights_ok = true;
    for (const auto& x : rule.nodes) {
      BigReal w = td.h[static_cast<std::size_t>(n - 1)] / (horner(dpn, x, wd) * horner(pnm1, x, wd));
      if (w.sign() <= 0) weights_ok = false;
      rule.weights.push_back(std::move(w));
    }
    if (!weights_ok) continue;

    // Moment reproduction errors at the stated precision.
    rule.eps.clear();
    std::vector<BigReal> pw(rule.nodes.size(), BigReal(1L, wd));
    for (int j = 0; j < 2 * n; ++j) {
      BigReal s(0L, wd);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (j > 0) pw[i] *= rule.nodes[i];
        s += rule.weights[i] * pw[i];
      }
      rule.eps.push_back((BigReal(ms.mu[static_cast<std::size_t>(j)], wd) - s).to_digits(digits));
    }

    bool eps_ok = true;
    for (int j = 0; j < 2 * n && eps_ok; ++j) {
      BigReal bound = tol_scale;
      const BigReal mj = BigReal(ms.mu[static_cast<std::size_t>(j)], digits).abs();
      if (mj > BigReal(1L, digits)) bound = tol_scale * mj;
      if (rule.eps[static_cast<std::size_t>(j)].abs() > bound) eps_ok = false;
    }
    if (!eps_ok) continue;
    return rule;
  }
  throw std::runtime_error("gauss_rule: moment-reproduction errors stayed above tolerance");
}

BigReal quadrature_threshold_probability(const QuadratureRule& rule, const Rational& tstar) {
  if (tstar < Rational(0) || tstar > Rational(1))
    throw std::invalid_argument("quadrature_threshold_probability: threshold outside [0,1]");
  const int wd = rule.working_digits;
  const std::size_t n = rule.nodes.size();

  // Anchors (x_i, F_i): (0,0), midpoints with cumulative weights, (1,1).
  std::vector<BigReal> xs, fs;
  xs.emplace_back(0L, wd);
  fs.emplace_back(0L, wd);
  BigReal cum(0L, wd);
  const BigReal half(Rational(1, 2), wd);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cum += rule.weights[i];
    xs.push_back((rule.nodes[i] + rule.nodes[i + 1]) * half);
    fs.push_back(cum);
  }
  xs.emplace_back(1L, wd);
  fs.emplace_back(1L, wd);

  const BigReal t(tstar, wd);
  BigReal cdf = fs.back();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (t >= xs[i] && t <= xs[i + 1]) {
      const BigReal dx = xs[i + 1] - xs[i];
      cdf = dx.is_zero() ? fs[i] : fs[i] + (fs[i + 1] - fs[i]) * (t - xs[i]) / dx;
      break;
    }
  }
  return (BigReal(1L, wd) - cdf).to_digits(rule.digits);
}

}  // namespace dml
