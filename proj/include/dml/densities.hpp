#ifndef DML_DENSITIES_HPP
#define DML_DENSITIES_HPP

#include <functional>

#include "dml/rational.hpp"

namespace dml {

enum class Metric { hs, bures };

/// Closed-form probability density of t = 2^8 |rho| over (0,1] for generic
/// two-rebit states under Hilbert-Schmidt measure. f(0+) = 63/4.
double hs_det_density(double t);

/// Its Bures-measure counterpart; diverges like 6/sqrt(t) as t -> 0+.
double bures_det_density(double t);

/// Exact n-th moment of t under the chosen metric:
///   hs:    (4)_{2n} (2)_{2n} / ((5)_{2n} (11/2)_{2n})
///   bures: (3/2)_{2n} / ((n+1)(2n+1)(4)_{2n})
Rational density_moment_exact(Metric metric, long n);

/// Numeric moment integral t^n f(t) dt (adaptive quadrature, u = sqrt(t)
/// substitution near zero); agrees with the exact value to ~1e-8 relative.
double density_moment(Metric metric, long n);

/// Density of the product X1 X2 of independent variables on [0,1]:
/// f(x) = integral_x^1 f1(s) f2(x/s) ds / s, by adaptive quadrature.
std::function<double(double)> product_density(std::function<double(double)> f1,
                                              std::function<double(double)> f2);

/// Unique crossing point of the two densities in (0, 0.1); the HS curve
/// dominates above it.
double hs_bures_crossing();

/// Adaptive Simpson integration with interval bisection.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-12);

/// A closed-form density bundled with its declared exact moment formula.
struct ClosedDensity {
  Metric metric = Metric::hs;
  std::function<double(double)> evaluation;
  std::function<Rational(long)> moment;
};

ClosedDensity closed_density(Metric metric);

}  // namespace dml

#endif
