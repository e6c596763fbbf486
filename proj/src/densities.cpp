#include "dml/densities.hpp"

#include <cmath>
#include <stdexcept>

#include "dml/moments.hpp"

namespace dml {

double hs_det_density(double t) {
  if (t < 0.0 || t > 1.0) throw std::domain_error("hs_det_density: t outside [0,1]");
  if (t == 0.0) return 63.0 / 4.0;
  const double rt = std::sqrt(t);
  const double s = std::sqrt(1.0 - rt);
  double v = s * (2.0 - 9.0 * rt - 8.0 * t) + 15.0 * t * std::log1p(s) - 3.75 * t * std::log(t);
  return 63.0 / 8.0 * v;
}

double bures_det_density(double t) {
  if (t <= 0.0 || t > 1.0) throw std::domain_error("bures_det_density: t outside (0,1]");
  const double rt = std::sqrt(t);
  const double pi = 3.14159265358979323846;
  double v = 3.0 * pi * (4.0 * rt + 1.0) - 4.0 * (13.0 + 2.0 * rt) * std::sqrt(rt - t) -
             2.0 * (12.0 * rt + 3.0) * std::asin(2.0 * rt - 1.0);
  return v / (pi * rt);
}

Rational density_moment_exact(Metric metric, long n) {
  if (n < 0) throw std::invalid_argument("density_moment_exact: negative order");
  if (metric == Metric::hs) {
    return pochhammer(Rational(4), 2 * n) * pochhammer(Rational(2), 2 * n) /
           (pochhammer(Rational(5), 2 * n) * pochhammer(Rational(11, 2), 2 * n));
  }
  return pochhammer(Rational(3, 2), 2 * n) /
         (Rational(n + 1) * Rational(2 * n + 1) * pochhammer(Rational(4), 2 * n));
}

namespace {

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double m,
                     double fm, double b, double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, fa, flm, m, fm);
  const double right = simpson(m, fm, frm, b, fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw std::runtime_error("adaptive_integrate: did not converge");
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_step(f, a, fa, m, fm, b, fb, simpson(a, fa, fm, b, fb), tol, 100);
}

double density_moment(Metric metric, long n) {
  if (n < 0 || n > 30) throw std::invalid_argument("density_moment: order outside 0..30");
  // t = v^4 removes both the 1/sqrt(t) divergence and the t^(1/4) cusp of
  // the Bures integrand at the origin.
  auto g = [&](double v) {
    const double t = v * v * v * v;
    const double f = metric == Metric::hs ? hs_det_density(t) : bures_det_density(t == 0.0 ? 1e-300 : t);
    return 4.0 * v * v * v * std::pow(t, static_cast<double>(n)) * f;
  };
  // Fixed initial panels so the high-order integrand's peak near v = 1 is
  // never missed by the first coarse probe.
  const int panels = 16;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i)
    sum += adaptive_integrate(g, static_cast<double>(i) / panels,
                              static_cast<double>(i + 1) / panels, 1e-12 / panels);
  return sum;
}

std::function<double(double)> product_density(std::function<double(double)> f1,
                                              std::function<double(double)> f2) {
  return [f1 = std::move(f1), f2 = std::move(f2)](double x) {
    if (x <= 0.0 || x >= 1.0) throw std::domain_error("product_density: x outside (0,1)");
    auto g = [&](double s) { return f1(s) * f2(x / s) / s; };
    return adaptive_integrate(g, x, 1.0, 1e-12);
  };
}

ClosedDensity closed_density(Metric metric) {
  ClosedDensity d;
  d.metric = metric;
  d.evaluation = metric == Metric::hs ? hs_det_density : bures_det_density;
  d.moment = [metric](long n) { return density_moment_exact(metric, n); };
  return d;
}

double hs_bures_crossing() {
  auto diff = [](double t) { return hs_det_density(t) - bures_det_density(t); };
  double lo = 1e-4, hi = 0.1;
  if (!(diff(lo) < 0.0 && diff(hi) > 0.0))
    throw std::runtime_error("hs_bures_crossing: bracket failed");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (diff(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace dml
