#ifndef DML_QUADRATURE_HPP
#define DML_QUADRATURE_HPP

#include <utility>
#include <vector>

#include "dml/bigreal.hpp"
#include "dml/moment_sequence.hpp"

namespace dml {

/// Gaussian quadrature rule derived from a moment sequence on the rescaled
/// [0,1] axis. Nodes are the roots of the monic orthogonal polynomial P_n
/// (computed as eigenvalues of the symmetric Jacobi matrix); weights come
/// from w_i = h_{n-1} / (P_n'(x_i) P_{n-1}(x_i)). eps[j] records the moment
/// reproduction error mu_j - sum_i w_i x_i^j for j = 0..2n-1.
struct QuadratureRule {
  int order = 0;
  int digits = 64;          // stated precision
  int working_digits = 64;  // precision the solve actually ran at
  Rational lo, hi;          // raw-variable range, for mapping nodes back
  std::vector<BigReal> nodes;    // ascending, in (0,1)
  std::vector<BigReal> weights;  // positive
  std::vector<BigReal> h;        // structural constants h_0..h_{n-1}
  std::vector<BigReal> eps;      // moment errors, j = 0..2n-1

  BigReal max_abs_eps() const;
  /// Node mapped back to the raw variable, then scaled by `scale`
  /// (e.g. 16 for the 16|rho^PT| convention).
  BigReal raw_node(std::size_t i, const Rational& scale) const;
};

/// Monic orthogonal polynomial of degree n for the sequence: coefficients
/// a_0..a_{n-1} of P_n = x^n + sum a_i x^i obtained from the Hankel system
/// sum_i a_i mu_{i+j} = -mu_{j+n}, plus the structural constant
/// h_n = sum_i a_i mu_{i+n} + mu_{2n} > 0. The solve runs at `digits`,
/// escalating internally when the Hankel factorization degenerates.
std::pair<std::vector<BigReal>, BigReal> monic_orthopoly(const MomentSequence& ms, int n,
                                                         int digits = 64);

/// Builds the n-node rule. The working precision starts at
/// digits + 4n and doubles until every |eps_j| clears the tolerance
/// 10^(-digits/2) max(1, mu_j); failure to converge throws.
/// With recurrence_route = true the three-term recurrence coefficients are
/// computed by the moment-based recurrence algorithm instead of the Hankel
/// Cholesky factorization (diagnostic alternative; same rule within
/// tolerance).
QuadratureRule gauss_rule(const MomentSequence& ms, int n, int digits = 64,
                          bool recurrence_route = false);

/// Piecewise-linear CDF through the cumulative weights at node midpoints,
/// anchored at (0,0) and (1,1); returns 1 - CDF(tstar).
BigReal quadrature_threshold_probability(const QuadratureRule& rule, const Rational& tstar);

}  // namespace dml

#endif
