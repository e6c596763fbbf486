#ifndef DML_SAMPLER_HPP
#define DML_SAMPLER_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <iosfwd>
#include <string>
#include <vector>

#include "dml/rational.hpp"
#include "dml/rng.hpp"
#include "dml/stats.hpp"

namespace dml {

enum class Ring { real, complex_ring, quaternion };
enum class SampleMeasure { hs, bures };

std::string to_string(Ring r);
Ring ring_from_string(const std::string& s);
std::string to_string(SampleMeasure m);
SampleMeasure measure_from_string(const std::string& s);

/// Bipartite factor dimensions; the partial transpose acts on the second
/// (d2-dimensional) factor.
struct Dims {
  int d1 = 2;
  int d2 = 2;
  int d() const { return d1 * d2; }
};

Dims dims_for(int d);  // 4 -> (2,2), 6 -> (2,3)

/// A sampled trace-one positive matrix. Real and complex states are stored
/// directly; a quaternionic state is stored through its 2d x 2d complex
/// adjoint representation (quaternionic trace 1, complex trace 2), with the
/// Moore determinant taken as the positive square root of the complex one.
struct DensityMatrixSample {
  Ring ring = Ring::real;
  Dims dims;
  Eigen::MatrixXcd m;
};

/// Hilbert-Schmidt sampling. Real states use a d x (d+1) Ginibre block (the
/// square real block induces a det^{-1/2}-weighted measure instead of the
/// flat one); complex states use the square d x d block; quaternionic states
/// (d = 4) are drawn through the Cholesky-sphere parameterization, which
/// realizes the flat measure exactly.
DensityMatrixSample sample_hs(Ring ring, int d, RngStream& rng);

/// Bures sampling, d = 4. Complex: rho ~ (I+U) G G^dag (I+U)^dag with G a
/// square Ginibre block and U Haar unitary. Real: eigenvalues are drawn by
/// exact rejection from the real Bures joint eigenvalue density and rotated
/// by a Haar orthogonal frame; the (I+O) construction does not reproduce the
/// real Bures determinant moments and is not used.
DensityMatrixSample sample_bures(Ring ring, int d, RngStream& rng);

/// Transposes each d2 x d2 block in place (partial transpose on the second
/// factor). An involution; preserves trace and Hermiticity.
template <class Derived>
typename Derived::PlainObject partial_transpose(const Eigen::MatrixBase<Derived>& rho, Dims dims) {
  if (rho.rows() != dims.d() || rho.cols() != dims.d())
    throw std::invalid_argument("partial_transpose: dimension mismatch");
  typename Derived::PlainObject out(rho.rows(), rho.cols());
  const int d2 = dims.d2;
  for (int b1 = 0; b1 < dims.d1; ++b1)
    for (int b2 = 0; b2 < dims.d1; ++b2)
      out.block(b1 * d2, b2 * d2, d2, d2) = rho.block(b1 * d2, b2 * d2, d2, d2).transpose();
  return out;
}

/// Determinant under the sample's ring convention (Moore determinant for
/// quaternionic samples).
double determinant(const DensityMatrixSample& s);

/// Determinant of the partial transpose; unsupported for quaternionic
/// samples.
double pt_determinant(const DensityMatrixSample& s);

struct SampleChecks {
  double trace_error = 0.0;      // |tr - 1|
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
};
SampleChecks check_sample(const DensityMatrixSample& s);

/// rho = C^T C for the upper-triangular Cholesky factor with entries
/// (c11,c12,c13,c14,c22,c23,c24,c33,c34,c44) on the unit 9-sphere, plus the
/// analytic Jacobian 2^4 prod_i c_ii^(5-i) of the full 10-variable map.
std::pair<Eigen::Matrix4d, double> cholesky_map(const std::array<double, 10>& c);

/// Normalized expectation of prod c_ij^(n_ij) |rho|^k under the
/// Jacobian-weighted sphere measure (the two-rebit HS picture). Zero when any
/// off-diagonal exponent is odd; odd diagonal exponents are a domain error.
/// Exponent order matches cholesky_map.
Rational dirichlet_monomial_expectation(const std::array<long, 10>& exponents, long k);

struct McOptions {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Monte Carlo mean of |rho|^k |rho^PT|^n (quaternionic: k only, n = 0).
SampleStats mc_moment(Ring ring, SampleMeasure measure, int n, int k, const McOptions& opt,
                      int d = 4);

/// Frequency of det(PT(rho)) >= 0 among d = 4 samples, where nonnegativity
/// of the PT determinant is equivalent to separability.
SampleStats mc_separability_probability(Ring ring, SampleMeasure measure, const McOptions& opt);

/// Separability frequency for the non-generic family with a single free
/// off-diagonal pair from R^beta (squares follow a Dirichlet law).
SampleStats mc_nongeneric_separability(int beta, const McOptions& opt);

/// 2-D counts of (|rho|, |rho^PT|) over the proven ranges
/// [0, 1/256] x [-1/16, 1/256]; a sample outside the ranges throws, since it
/// would signal a determinant bug.
struct Histogram2D {
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  int nx = 0, ny = 0;
  std::vector<std::int64_t> counts;  // row-major over x, then y
  std::uint64_t total = 0;

  std::int64_t& at(int ix, int iy) { return counts[static_cast<std::size_t>(ix) * ny + iy]; }
  std::int64_t at(int ix, int iy) const { return counts[static_cast<std::size_t>(ix) * ny + iy]; }
};

Histogram2D joint_histogram(Ring ring, const McOptions& opt, int bins);

/// CSV with header "x_lo,x_hi,y_lo,y_hi,count", one row per bin.
void write_histogram_csv(const Histogram2D& h, std::ostream& os);

}  // namespace dml

#endif
