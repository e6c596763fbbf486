#ifndef DML_LEGENDRE_HPP
#define DML_LEGENDRE_HPP

#include <string>
#include <vector>

#include "dml/bigreal.hpp"
#include "dml/moment_sequence.hpp"

namespace dml {

/// Least-squares (orthogonal-projection) polynomial approximant of a density
/// on [0,1] in the shifted-Legendre basis: f_N(x) = sum_j (2j+1) l_j Pt_j(x),
/// with l_j = integral of Pt_j against the density (i.e. a moment combination).
struct DensityApprox {
  int order = 0;            // basis order N
  int digits = 64;          // stated precision of the run
  int working_digits = 64;  // internal precision actually used
  std::vector<BigReal> lambda;
};

/// Internal working precision needed for an order-N projection: the
/// moment-to-Legendre map loses about 0.602 digits per order, so the stated
/// precision is padded accordingly.
int legendre_working_digits(long N, int digits);

/// Computes l_0..l_N from the rescaled moments. The recurrence runs at the
/// padded working precision; for j <= 50 each l_j is recomputed in exact
/// rational arithmetic and the two routes must agree to 10^-(digits-8),
/// otherwise a std::runtime_error reports the precision insufficiency.
DensityApprox legendre_coefficients(const MomentSequence& ms, long N, int digits = 64);

/// Evaluates the approximant at a point of [0,1].
BigReal density_value(const DensityApprox& da, const BigReal& x);

/// Exact-polynomial tail mass integral_{tstar}^1 f_N(x) dx, reported at the
/// stated precision. Values outside [0,1] are reported as-is; they diagnose
/// an under-resolved approximation.
BigReal tail_probability(const DensityApprox& da, const Rational& tstar);

/// Monomial coefficients of the shifted Legendre polynomial Pt_j on [0,1],
/// exact, ascending. Pt_0 = 1, Pt_1 = 2x - 1, ...
std::vector<Rational> shifted_legendre_coefficients(long j);

/// One reconstruction run: moments -> projection -> threshold tail mass.
struct EstimateRecord {
  Rational alpha;
  SequenceVariable variable = SequenceVariable::ptdet;
  long n_moments = 0;
  int precision_digits = 64;
  std::string method = "legendre";
  BigReal estimate;
  Rational threshold;
};

enum class ReconstructionMethod { legendre, mnatsakanov, quadrature };

std::string to_string(ReconstructionMethod m);
ReconstructionMethod reconstruction_method_from_string(const std::string& s);

/// Separability-probability estimate for a thresholded variable
/// (ptdet or product). N is the number of moments; for the quadrature
/// method it is the node count.
EstimateRecord separability_estimate(const Rational& alpha, SequenceVariable variable, long N,
                                     int digits = 64,
                                     ReconstructionMethod method = ReconstructionMethod::legendre);

}  // namespace dml

#endif
