#pragma once

// Portable seeded sampling. std::mt19937_64 output is fixed by the standard;
// the distribution adaptors in <random> are not, so the few transforms we
// need are written out to keep reports byte-identical across toolchains.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "geometry.hpp"

namespace bloch {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Uniform on the complex unit disk.
  cplx disk() {
    const double r = std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }

  /// Uniform on the unit sphere of C^n.
  Point sphere(std::size_t dim) {
    Point p(dim);
    double nsq = 0.0;
    do {
      for (std::size_t j = 0; j < dim; ++j) p[j] = cplx{normal(), normal()};
      nsq = norm_sq(p);
    } while (nsq == 0.0);
    return (1.0 / std::sqrt(nsq)) * p;
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bloch
