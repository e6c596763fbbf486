#include "dml/sampler.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <mutex>
#include <thread>

#include "dml/moments.hpp"

namespace dml {

std::string to_string(Ring r) {
  switch (r) {
    case Ring::real:
      return "real";
    case Ring::complex_ring:
      return "complex";
    case Ring::quaternion:
      return "quaternion";
  }
  return "?";
}

Ring ring_from_string(const std::string& s) {
  if (s == "real") return Ring::real;
  if (s == "complex") return Ring::complex_ring;
  if (s == "quaternion") return Ring::quaternion;
  throw std::invalid_argument("unknown ring '" + s + "'");
}

std::string to_string(SampleMeasure m) { return m == SampleMeasure::hs ? "hs" : "bures"; }

SampleMeasure measure_from_string(const std::string& s) {
  if (s == "hs") return SampleMeasure::hs;
  if (s == "bures") return SampleMeasure::bures;
  throw std::invalid_argument("unknown measure '" + s + "'");
}

Dims dims_for(int d) {
  if (d == 4) return {2, 2};
  if (d == 6) return {2, 3};
  throw std::invalid_argument("dims_for: d must be 4 or 6");
}

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cplx = std::complex<double>;

MatrixXd ginibre_real(int rows, int cols, RngStream& rng) {
  MatrixXd g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = rng.normal();
  return g;
}

MatrixXcd ginibre_complex(int rows, int cols, RngStream& rng) {
  MatrixXcd g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = cplx(rng.normal(), rng.normal());
  return g;
}

MatrixXcd haar_unitary(int d, RngStream& rng) {
  MatrixXcd g = ginibre_complex(d, d, rng);
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd q = qr.householderQ();
  MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    cplx ph = r(i, i);
    const double a = std::abs(ph);
    ph = a > 0.0 ? ph / a : cplx(1, 0);
    q.col(i) *= ph;
  }
  return q;
}

MatrixXd haar_orthogonal(int d, RngStream& rng) {
  MatrixXd g = ginibre_real(d, d, rng);
  Eigen::HouseholderQR<MatrixXd> qr(g);
  MatrixXd q = qr.householderQ();
  MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i)
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  return q;
}

MatrixXd hs_state_real(int d, RngStream& rng) {
  MatrixXd g = ginibre_real(d, d + 1, rng);
  MatrixXd rho = g * g.transpose();
  return rho / rho.trace();
}

MatrixXcd hs_state_complex(int d, RngStream& rng) {
  MatrixXcd g = ginibre_complex(d, d, rng);
  MatrixXcd rho = g * g.adjoint();
  return rho / rho.trace().real();
}

MatrixXcd bures_state_complex(int d, RngStream& rng) {
  MatrixXcd g = ginibre_complex(d, d, rng);
  MatrixXcd u = haar_unitary(d, rng);
  MatrixXcd a = (MatrixXcd::Identity(d, d) + u) * g;
  MatrixXcd rho = a * a.adjoint();
  return rho / rho.trace().real();
}

// Real Bures eigenvalues by rejection: proposal Dirichlet(1/2,1/2,1/2,1/2)
// carries the (prod l)^(-1/2) factor; the residual weight
// prod_{i<j} |l_i - l_j| / sqrt(l_i + l_j) is at most 1.
void bures_eigs_real4(RngStream& rng, double l[4]) {
  for (;;) {
    double t[4], s = 0.0;
    for (double& x : t) {
      x = rng.gamma(0.5);
      s += x;
    }
    for (int i = 0; i < 4; ++i) t[i] /= s;
    double w = 1.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) w *= std::fabs(t[i] - t[j]) / std::sqrt(t[i] + t[j]);
    if (rng.uniform01() < w) {
      for (int i = 0; i < 4; ++i) l[i] = t[i];
      return;
    }
  }
}

MatrixXd bures_state_real(int d, RngStream& rng) {
  if (d != 4) throw std::invalid_argument("sample_bures: d must be 4");
  double l[4];
  bures_eigs_real4(rng, l);
  MatrixXd o = haar_orthogonal(4, rng);
  return o * Eigen::Vector4d(l[0], l[1], l[2], l[3]).asDiagonal() * o.transpose();
}

// Quaternionic Cholesky-sphere state in the 2d x 2d complex adjoint
// representation (d = 4). Diagonal radii are chi-distributed with
// 4(4-i)+2 degrees of freedom, matching the Jacobian weight
// prod c_ii^(4(4-i)+1) of rho = C^dag C on the unit 28-sphere.
MatrixXcd hs_state_quaternion(RngStream& rng) {
  static constexpr double kDiagDof[4] = {14.0, 10.0, 6.0, 2.0};
  double diag[4];
  double nrm2 = 0.0;
  for (int i = 0; i < 4; ++i) {
    diag[i] = rng.chi(kDiagDof[i]);
    nrm2 += diag[i] * diag[i];
  }
  cplx z[4][4], w[4][4];
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double q0 = rng.normal(), q1 = rng.normal(), q2 = rng.normal(), q3 = rng.normal();
      nrm2 += q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3;
      z[i][j] = cplx(q0, q1);
      w[i][j] = cplx(q2, q3);
    }
  }
  const double inv = 1.0 / std::sqrt(nrm2);
  MatrixXcd c = MatrixXcd::Zero(8, 8);
  for (int i = 0; i < 4; ++i) {
    c(2 * i, 2 * i) = diag[i] * inv;
    c(2 * i + 1, 2 * i + 1) = diag[i] * inv;
    for (int j = i + 1; j < 4; ++j) {
      const cplx zz = z[i][j] * inv, ww = w[i][j] * inv;
      c(2 * i, 2 * j) = zz;
      c(2 * i, 2 * j + 1) = ww;
      c(2 * i + 1, 2 * j) = -std::conj(ww);
      c(2 * i + 1, 2 * j + 1) = std::conj(zz);
    }
  }
  return c.adjoint() * c;
}

double det_real(const MatrixXd& m) { return m.determinant(); }
double det_herm(const MatrixXcd& m) { return m.determinant().real(); }

constexpr std::uint64_t kChunk = 1ull << 16;

// Deterministic chunked runner: chunk c always uses RngStream(seed, c) and
// partial results merge in chunk order regardless of the thread count.
template <class Acc, class Body>
std::vector<Acc> run_chunked(const McOptions& opt, Body body) {
  const std::uint64_t nchunks = (opt.samples + kChunk - 1) / kChunk;
  std::vector<Acc> accs(nchunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= nchunks) break;
        const std::uint64_t count = std::min(kChunk, opt.samples - c * kChunk);
        RngStream rng(opt.seed, c);
        body(accs[c], rng, count);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  const int nthreads = std::max(1, opt.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return accs;
}

void require_min_samples(const McOptions& opt) {
  if (opt.samples < 10000)
    throw std::invalid_argument("monte carlo: at least 10^4 samples required");
}

}  // namespace

DensityMatrixSample sample_hs(Ring ring, int d, RngStream& rng) {
  DensityMatrixSample s;
  s.ring = ring;
  s.dims = dims_for(d);
  switch (ring) {
    case Ring::real:
      s.m = hs_state_real(d, rng).cast<cplx>();
      break;
    case Ring::complex_ring:
      s.m = hs_state_complex(d, rng);
      break;
    case Ring::quaternion:
      if (d != 4) throw std::invalid_argument("sample_hs: quaternionic sampling supports d = 4");
      s.m = hs_state_quaternion(rng);
      break;
  }
  return s;
}

DensityMatrixSample sample_bures(Ring ring, int d, RngStream& rng) {
  if (d != 4) throw std::invalid_argument("sample_bures: d must be 4");
  DensityMatrixSample s;
  s.dims = dims_for(d);
  s.ring = ring;
  switch (ring) {
    case Ring::real:
      s.m = bures_state_real(d, rng).cast<cplx>();
      break;
    case Ring::complex_ring:
      s.m = bures_state_complex(d, rng);
      break;
    case Ring::quaternion:
      throw std::invalid_argument("sample_bures: quaternionic Bures sampling is not supported");
  }
  return s;
}

double determinant(const DensityMatrixSample& s) {
  if (s.ring == Ring::quaternion) {
    const double d = s.m.determinant().real();
    return d > 0.0 ? std::sqrt(d) : 0.0;
  }
  return det_herm(s.m);
}

double pt_determinant(const DensityMatrixSample& s) {
  if (s.ring == Ring::quaternion)
    throw std::invalid_argument("pt_determinant: unsupported for quaternionic samples");
  return det_herm(partial_transpose(s.m, s.dims));
}

SampleChecks check_sample(const DensityMatrixSample& s) {
  SampleChecks c;
  const double tr = s.m.trace().real();
  c.trace_error = std::fabs(tr - (s.ring == Ring::quaternion ? 2.0 : 1.0));
  c.hermiticity_error = (s.m - s.m.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(s.m, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  return c;
}

std::pair<Eigen::Matrix4d, double> cholesky_map(const std::array<double, 10>& c) {
  const double c11 = c[0], c22 = c[4], c33 = c[7], c44 = c[9];
  if (c11 < 0.0 || c22 < 0.0 || c33 < 0.0 || c44 < 0.0)
    throw std::invalid_argument("cholesky_map: diagonal entries must be nonnegative");
  double n2 = 0.0;
  for (double x : c) n2 += x * x;
  if (std::fabs(n2 - 1.0) > 1e-9)
    throw std::invalid_argument("cholesky_map: point must lie on the unit sphere");
  Eigen::Matrix4d u = Eigen::Matrix4d::Zero();
  u(0, 0) = c11;
  u(0, 1) = c[1];
  u(0, 2) = c[2];
  u(0, 3) = c[3];
  u(1, 1) = c22;
  u(1, 2) = c[5];
  u(1, 3) = c[6];
  u(2, 2) = c33;
  u(2, 3) = c[8];
  u(3, 3) = c44;
  const double jac = 16.0 * std::pow(c11, 4) * std::pow(c22, 3) * std::pow(c33, 2) * c44;
  return {u.transpose() * u, jac};
}

Rational dirichlet_monomial_expectation(const std::array<long, 10>& n, long k) {
  if (k < 0) throw std::invalid_argument("dirichlet_monomial_expectation: negative k");
  for (long e : n)
    if (e < 0) throw std::invalid_argument("dirichlet_monomial_expectation: negative exponent");
  static constexpr int kDiag[4] = {0, 4, 7, 9};
  for (int d : kDiag)
    if (n[static_cast<std::size_t>(d)] % 2 != 0)
      throw std::domain_error("dirichlet_monomial_expectation: odd diagonal exponent");
  long total = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    if (n[i] % 2 != 0) {
      bool diag = false;
      for (int d : kDiag) diag = diag || d == static_cast<int>(i);
      if (!diag) return Rational(0);  // odd off-diagonal power integrates to zero
    }
    total += n[i];
  }
  static const Rational kDiagBase[4] = {Rational(5, 2), Rational(2), Rational(3, 2), Rational(1)};
  Rational num(1);
  for (int i = 0; i < 4; ++i)
    num *= pochhammer(kDiagBase[i], k + n[static_cast<std::size_t>(kDiag[i])] / 2);
  for (std::size_t i = 0; i < 10; ++i) {
    bool diag = false;
    for (int d : kDiag) diag = diag || d == static_cast<int>(i);
    if (!diag) num *= pochhammer(Rational(1, 2), n[i] / 2);
  }
  return num / pochhammer(Rational(10), 4 * k + total / 2);
}

namespace {

struct MomentAcc {
  RunningStats stats;
};

template <class StateFn, class ValueFn>
SampleStats run_value_mc(const McOptions& opt, StateFn make_state, ValueFn value) {
  auto accs = run_chunked<MomentAcc>(opt, [&](MomentAcc& acc, RngStream& rng, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) acc.stats.add(value(make_state(rng)));
  });
  RunningStats total;
  for (const auto& a : accs) total.merge(a.stats);
  return total.finalize();
}

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

SampleStats mc_moment(Ring ring, SampleMeasure measure, int n, int k, const McOptions& opt, int d) {
  require_min_samples(opt);
  if (n < 0 || k < 0) throw std::invalid_argument("mc_moment: negative exponent");
  const Dims dims = dims_for(d);

  if (ring == Ring::quaternion) {
    if (n != 0) throw std::invalid_argument("mc_moment: quaternionic PT moments unsupported");
    if (measure != SampleMeasure::hs || d != 4)
      throw std::invalid_argument("mc_moment: quaternionic sampling is HS d = 4 only");
    return run_value_mc(
        opt, [&](RngStream& rng) { return hs_state_quaternion(rng); },
        [&](const MatrixXcd& rho) {
          const double det = rho.determinant().real();
          return ipow(det > 0.0 ? std::sqrt(det) : 0.0, k);
        });
  }

  if (measure == SampleMeasure::bures && d != 4)
    throw std::invalid_argument("mc_moment: Bures sampling is d = 4 only");

  if (ring == Ring::real) {
    auto make = [&](RngStream& rng) {
      return measure == SampleMeasure::hs ? hs_state_real(d, rng) : bures_state_real(d, rng);
    };
    return run_value_mc(opt, make, [&](const MatrixXd& rho) {
      return ipow(det_real(rho), k) * ipow(det_real(partial_transpose(rho, dims)), n);
    });
  }
  auto make = [&](RngStream& rng) {
    return measure == SampleMeasure::hs ? hs_state_complex(d, rng) : bures_state_complex(d, rng);
  };
  return run_value_mc(opt, make, [&](const MatrixXcd& rho) {
    return ipow(det_herm(rho), k) * ipow(det_herm(partial_transpose(rho, dims)), n);
  });
}

namespace {

struct HitAcc {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
};

}  // namespace

SampleStats mc_separability_probability(Ring ring, SampleMeasure measure, const McOptions& opt) {
  require_min_samples(opt);
  if (ring == Ring::quaternion)
    throw std::invalid_argument("mc_separability_probability: quaternionic PT unsupported");
  const Dims dims = dims_for(4);
  auto accs = run_chunked<HitAcc>(opt, [&](HitAcc& acc, RngStream& rng, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      double ptdet;
      if (ring == Ring::real) {
        const MatrixXd rho =
            measure == SampleMeasure::hs ? hs_state_real(4, rng) : bures_state_real(4, rng);
        ptdet = det_real(partial_transpose(rho, dims));
      } else {
        const MatrixXcd rho =
            measure == SampleMeasure::hs ? hs_state_complex(4, rng) : bures_state_complex(4, rng);
        ptdet = det_herm(partial_transpose(rho, dims));
      }
      acc.total++;
      if (ptdet >= 0.0) acc.hits++;
    }
  });
  std::uint64_t hits = 0, total = 0;
  for (const auto& a : accs) {
    hits += a.hits;
    total += a.total;
  }
  return frequency_stats(hits, total);
}

SampleStats mc_nongeneric_separability(int beta, const McOptions& opt) {
  require_min_samples(opt);
  if (beta < 1) throw std::invalid_argument("mc_nongeneric_separability: beta must be >= 1");
  const double b2 = 0.5 * beta;
  auto accs = run_chunked<HitAcc>(opt, [&](HitAcc& acc, RngStream& rng, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const double t1 = rng.gamma(1.0);
      const double t2 = rng.gamma(1.0 + b2);
      const double t4 = rng.gamma(1.0);
      const double t5 = rng.gamma(b2);
      acc.total++;
      if (t1 * t4 >= t2 * t5) acc.hits++;
    }
  });
  std::uint64_t hits = 0, total = 0;
  for (const auto& a : accs) {
    hits += a.hits;
    total += a.total;
  }
  return frequency_stats(hits, total);
}

Histogram2D joint_histogram(Ring ring, const McOptions& opt, int bins) {
  require_min_samples(opt);
  if (bins < 10) throw std::invalid_argument("joint_histogram: at least 10 bins per axis");
  if (ring == Ring::quaternion) throw std::invalid_argument("joint_histogram: PT unsupported");

  Histogram2D h;
  h.x_lo = 0.0;
  h.x_hi = 1.0 / 256.0;
  h.y_lo = -1.0 / 16.0;
  h.y_hi = 1.0 / 256.0;
  h.nx = bins;
  h.ny = bins;
  h.counts.assign(static_cast<std::size_t>(bins) * bins, 0);

  struct GridAcc {
    std::vector<std::int64_t> counts;
  };
  const Dims dims = dims_for(4);
  const double slack = 1e-12;
  auto accs = run_chunked<GridAcc>(opt, [&](GridAcc& acc, RngStream& rng, std::uint64_t count) {
    acc.counts.assign(static_cast<std::size_t>(bins) * bins, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      double x, y;
      if (ring == Ring::real) {
        const MatrixXd rho = hs_state_real(4, rng);
        x = det_real(rho);
        y = det_real(partial_transpose(rho, dims));
      } else {
        const MatrixXcd rho = hs_state_complex(4, rng);
        x = det_herm(rho);
        y = det_herm(partial_transpose(rho, dims));
      }
      if (x < h.x_lo - slack || x > h.x_hi + slack || y < h.y_lo - slack || y > h.y_hi + slack)
        throw std::runtime_error("joint_histogram: sample outside the proven variable ranges");
      int ix = static_cast<int>((x - h.x_lo) / (h.x_hi - h.x_lo) * bins);
      int iy = static_cast<int>((y - h.y_lo) / (h.y_hi - h.y_lo) * bins);
      ix = std::min(std::max(ix, 0), bins - 1);
      iy = std::min(std::max(iy, 0), bins - 1);
      acc.counts[static_cast<std::size_t>(ix) * bins + iy]++;
    }
  });
  for (const auto& a : accs)
    for (std::size_t i = 0; i < h.counts.size(); ++i) h.counts[i] += a.counts[i];
  for (auto c : h.counts) h.total += static_cast<std::uint64_t>(c);
  return h;
}

void write_histogram_csv(const Histogram2D& h, std::ostream& os) {
  os << "x_lo,x_hi,y_lo,y_hi,count\n";
  const double dx = (h.x_hi - h.x_lo) / h.nx;
  const double dy = (h.y_hi - h.y_lo) / h.ny;
  os.precision(17);
  for (int ix = 0; ix < h.nx; ++ix) {
    for (int iy = 0; iy < h.ny; ++iy) {
      os << h.x_lo + ix * dx << ',' << h.x_lo + (ix + 1) * dx << ',' << h.y_lo + iy * dy << ','
         << h.y_lo + (iy + 1) * dy << ',' << h.at(ix, iy) << '\n';
    }
  }
}

}  // namespace dml
