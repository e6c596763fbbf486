#ifndef DML_MNATSAKANOV_HPP
#define DML_MNATSAKANOV_HPP

#include <vector>

#include "dml/bigreal.hpp"
#include "dml/moment_sequence.hpp"

namespace dml {

/// Moment-recovery CDF approximation of order M on [0,1]:
///   F_M(x) = sum_{k <= floor(M x)} b_k,
///   b_k    = sum_{j=k}^{M} C(M,j) C(j,k) (-1)^(j-k) mu_j.
/// The b_k are exact rationals; they sum to exactly 1.
std::vector<Rational> mnatsakanov_cdf_coefficients(const MomentSequence& ms, long M);

BigReal mnatsakanov_cdf(const MomentSequence& ms, long M, const Rational& x, int digits = 64);

/// Density estimate at the grid centers k/M: first differences of the CDF
/// scaled by M, i.e. M * b_k.
std::vector<BigReal> mnatsakanov_density(const MomentSequence& ms, long M, int digits = 64);

/// 1 - F_M(tstar), the recovered mass above the threshold.
BigReal mnatsakanov_tail(const MomentSequence& ms, long M, const Rational& tstar, int digits = 64);

}  // namespace dml

#endif
