#ifndef DML_STATS_HPP
#define DML_STATS_HPP

#include <cmath>
#include <cstdint>

namespace dml {

/// Mean with standard error and a 95% normal-approximation confidence
/// interval.
struct SampleStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double stderror = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

/// Welford accumulator; merge order must be deterministic for reproducible
/// statistics.
class RunningStats {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }

  void merge(const RunningStats& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
    const double d = o.mean_ - mean_;
    mean_ += d * nb / (na + nb);
    m2_ += o.m2_ + d * d * na * nb / (na + nb);
    n_ += o.n_;
  }

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }

  SampleStats finalize() const {
    SampleStats s;
    s.count = n_;
    s.mean = mean_;
    if (n_ > 1) {
      const double var = m2_ / static_cast<double>(n_ - 1);
      s.stderror = std::sqrt(var / static_cast<double>(n_));
    }
    s.ci_lo = s.mean - 1.959963984540054 * s.stderror;
    s.ci_hi = s.mean + 1.959963984540054 * s.stderror;
    return s;
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Binomial frequency with normal-approximation interval.
inline SampleStats frequency_stats(std::uint64_t hits, std::uint64_t total) {
  SampleStats s;
  s.count = total;
  if (total == 0) return s;
  const double p = static_cast<double>(hits) / static_cast<double>(total);
  s.mean = p;
  s.stderror = std::sqrt(p * (1.0 - p) / static_cast<double>(total));
  s.ci_lo = p - 1.959963984540054 * s.stderror;
  s.ci_hi = p + 1.959963984540054 * s.stderror;
  return s;
}

}  // namespace dml

#endif
