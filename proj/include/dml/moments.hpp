#ifndef DML_MOMENTS_HPP
#define DML_MOMENTS_HPP

#include <string>
#include <vector>

#include "dml/rational.hpp"

namespace dml {

// Exact closed-form moments of |rho| and |rho^PT| for 4x4 trace-one states
// under Hilbert-Schmidt measure, organized as an alpha-parameterized family:
// alpha = 1/2 real, 1 complex, 2 (presumptively) quaternionic. All values are
// exact rationals; every function here is pure.

enum class PochhammerDirection { ascending, descending };

enum class MomentVariable { det, ptdet, product, bivariate };

/// One exact moment request: <|rho|^k |rho^PT|^n> and its univariate slices.
struct MomentQuery {
  Rational alpha;  // Dyson-index-like family parameter, >= 0
  long n = 0;      // exponent of |rho^PT|, >= 0
  long k = 0;      // exponent of |rho|, >= 0
  MomentVariable variable = MomentVariable::bivariate;
};

/// Evaluates a query exactly (det ignores n, ptdet/product ignore k).
Rational evaluate(const MomentQuery& q);

/// Rising factorial (x)_m = x (x+1) ... (x+m-1); the descending variant is
/// x (x-1) ... (x-m+1). m = 0 gives 1.
Rational pochhammer(const Rational& x, long m,
                    PochhammerDirection dir = PochhammerDirection::ascending);

/// <|rho|^k> for the alpha-family.
Rational f0_det_moment(const Rational& alpha, long k);

/// Adjustment factor <|rho^PT|^n |rho|^k> / <|rho|^k> for the alpha-family,
/// evaluated by the terminating finite sum (valid for all integer n, k >= 0).
Rational f1_adjustment(const Rational& alpha, long n, long k);

/// <|rho|^k |rho^PT|^n> = f1_adjustment * f0_det_moment.
Rational bivariate_moment(const Rational& alpha, long n, long k);

/// <|rho^PT|^n> (the k = 0 slice).
Rational pt_moment(const Rational& alpha, long n);

/// <(|rho| |rho^PT|)^n> (the k = n diagonal).
Rational product_moment(const Rational& alpha, long n);

/// Closed form of product_moment at alpha = 0:
/// 4096^-n ((2n)!)^3 / ((3/2)_{2n} (5/2)_{4n}).
Rational classical_product_moment(long n);

/// R(n, k) = f0(n + k) / f0(k).
Rational r_ratio(const Rational& alpha, long n, long k);

/// Central adjustment <|rho|^k (|rho^PT| - |rho|)^n> / <|rho|^k>, computed by
/// exact binomial expansion in terms of f1 and R.
Rational f2_central_adjustment(const Rational& alpha, long n, long k);

/// Bulk evaluation of a whole univariate moment sequence; equivalent to
/// calling the per-order functions but with shared tables (O(N^2) total).
std::vector<Rational> pt_moment_sequence(const Rational& alpha, long n_max);
std::vector<Rational> product_moment_sequence(const Rational& alpha, long n_max);
std::vector<Rational> det_moment_sequence(const Rational& alpha, long n_max);

// --- numerator-polynomial extraction -------------------------------------

enum class NumeratorFamily { rebit, qubit, general };

/// Paper-convention denominator polynomial B_n evaluated at integer k:
/// rebit 128^n (k+3)_n (2k+11/2)_{2n}; qubit 2^{6n} (k+9/2)_n (2k+17/2)_{2n};
/// general 2^{6n} (k+3a+3/2)_n (2k+6a+5/2)_{2n}.
Rational family_denominator(NumeratorFamily family, long n, long k,
                            const Rational& alpha = Rational(0));

/// Numerator polynomial A_n(k) with f1_adjustment = A_n / B_n, extracted by
/// exact interpolation at k = 0..3n and verified at two extra nodes.
/// Throws std::runtime_error on an interpolation degree mismatch.
RationalPolynomial numerator_polynomial(NumeratorFamily family, long n,
                                        const Rational& alpha = Rational(0));

/// Closed forms for the leading coefficients of the rebit numerator:
/// depth d in 0..5 selects C_{3n+1-d}. depth >= 4 requires n >= 2.
Rational leading_coefficient_rebit(long n, int depth);

// --- 6x6 (qubit-qutrit / rebit-retrit) ------------------------------------

enum class SixBySixKind { rebit_retrit, qubit_qutrit };

/// Adjustment factor <|rho|^k |rho^PT|^n> / <|rho|^k> for generic 6x6 states.
/// Supported: (rebit_retrit, n in {1,2}) and (qubit_qutrit, n = 1); anything
/// else throws std::invalid_argument.
Rational sixbysix_adjustment(SixBySixKind kind, long n, long k);

// --- non-generic (single free off-diagonal pair) family -------------------

/// <|rho^PT|^n |rho|^k> for the non-generic beta-family, via the reduced
/// terminating sum.
Rational nongeneric_moment(long beta, long n, long k);

/// Same quantity by the unreduced double binomial sum; serves as an
/// independent oracle for nongeneric_moment.
Rational nongeneric_brute_oracle(long beta, long n, long k);

// --- unit-interval transformed identities ----------------------------------

/// <T_rho^k T_PT^order> / <T_rho^k> for the rebit case, where
/// T_rho = 256 |rho| and T_PT = (256 |rho^PT| + 16) / 17. order is 1 or 2.
Rational transformed_unit_interval_factor(long k, int order = 1);

}  // namespace dml

#endif
