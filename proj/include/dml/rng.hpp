#ifndef DML_RNG_HPP
#define DML_RNG_HPP

#include <cmath>
#include <cstdint>

namespace dml {

/// Counter-seeded xoshiro256++ stream. Identical (seed, stream) pairs
/// reproduce identical sample sequences; distinct stream ids give
/// independent streams for parallel workers.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t x = seed ^ (stream * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL);
    for (auto& si : s_) si = splitmix(x);
    // Avoid the all-zero state.
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x2545f4914f6cdd1dULL;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1).
  double uniform_open() {
    double u;
    do {
      u = uniform01();
    } while (u == 0.0);
    return u;
  }

  /// Standard normal (Box-Muller, cached second value).
  double normal() {
    if (has_cache_) {
      has_cache_ = false;
      return cache_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cache_ = r * std::sin(a);
    has_cache_ = true;
    return r * std::cos(a);
  }

  /// Gamma(shape, 1) via Marsaglia-Tsang, with the boost trick for shape < 1.
  double gamma(double shape) {
    if (shape <= 0.0) return 0.0;
    if (shape < 1.0) {
      const double u = uniform_open();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_open();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  /// Chi-distributed value with k degrees of freedom.
  double chi(double k) { return std::sqrt(2.0 * gamma(0.5 * k)); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  static std::uint64_t splitmix(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t s_[4];
  double cache_ = 0.0;
  bool has_cache_ = false;
};

}  // namespace dml

#endif
