#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "random.hpp"

namespace bloch {

/// Deterministic configuration of a supremum search.
///
/// Radial grid r_j = 1 - 2^-j for j = 0..radial_levels. Directions are the
/// coordinate axes followed by `directions_per_level` seeded unit vectors.
struct SamplingPlan {
  static constexpr int kMaxRadialLevels = 40;

  int radial_levels = 24;
  int directions_per_level = 32;
  int pair_samples = 2000;
  int refine_steps = 40;
  std::uint64_t seed = 42;

  void validate() const {
    if (radial_levels < 1 || radial_levels > kMaxRadialLevels) {
      throw std::invalid_argument("radial_levels must be in [1, 40], got " + std::to_string(radial_levels));
    }
    if (directions_per_level < 1) throw std::invalid_argument("directions_per_level must be positive");
    if (pair_samples < 1) throw std::invalid_argument("pair_samples must be positive");
    if (refine_steps < 0) throw std::invalid_argument("refine_steps must be non-negative");
  }

  [[nodiscard]] std::vector<double> radii() const {
    validate();
    std::vector<double> r(static_cast<std::size_t>(radial_levels) + 1);
    for (int j = 0; j <= radial_levels; ++j) r[static_cast<std::size_t>(j)] = 1.0 - std::ldexp(1.0, -j);
    return r;
  }

  [[nodiscard]] double max_radius() const { return 1.0 - std::ldexp(1.0, -radial_levels); }

  /// Axes e_1..e_n, then seeded uniform points of the sphere.
  [[nodiscard]] std::vector<Point> directions(std::size_t dim) const {
    validate();
    std::vector<Point> out;
    out.reserve(dim + static_cast<std::size_t>(directions_per_level));
    for (std::size_t j = 0; j < dim; ++j) out.push_back(Point::unit(dim, j));
    Rng rng(stream(0x6469726563ULL, dim));
    for (int k = 0; k < directions_per_level; ++k) out.push_back(rng.sphere(dim));
    return out;
  }

  /// Same plan with one radial level fewer.
  [[nodiscard]] SamplingPlan coarser() const {
    SamplingPlan p = *this;
    p.radial_levels = std::max(1, radial_levels - 1);
    return p;
  }

  [[nodiscard]] std::string fingerprint() const {
    return "J" + std::to_string(radial_levels) + "-D" + std::to_string(directions_per_level) + "-P" +
           std::to_string(pair_samples) + "-R" + std::to_string(refine_steps) + "-S" + std::to_string(seed);
  }

  /// Independent seeded stream for a named sample family.
  [[nodiscard]] std::uint64_t stream(std::uint64_t tag, std::uint64_t salt = 0) const {
    return splitmix(splitmix(seed ^ tag) + salt);
  }

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  friend bool operator==(const SamplingPlan&, const SamplingPlan&) = default;
};

/// Seeded interior point. Half the draws use a uniform radius, half a
/// dyadic-uniform radius that crowds the boundary.
inline Point random_ball_point(Rng& rng, std::size_t dim, double max_radius) {
  const Point dir = rng.sphere(dim);
  double r;
  if (rng.uniform() < 0.5) {
    r = max_radius * rng.uniform();
  } else {
    const double levels = -std::log2(1.0 - max_radius);
    r = 1.0 - std::exp2(-levels * rng.uniform());
  }
  return r * dir;
}

struct LineSearchResult {
  double t = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of `q` on [lo, hi]. Returns the best
/// evaluated point; the result never exceeds a true value of q.
inline LineSearchResult golden_maximize(const std::function<double(double)>& q, double lo, double hi,
                                        int steps) {
  constexpr double kInvPhi = 0.6180339887498949;
  LineSearchResult best{lo, q(lo)};
  auto consider = [&best](double t, double v) {
    if (v > best.value) best = {t, v};
  };
  consider(hi, q(hi));
  if (steps <= 0 || !(hi > lo)) return best;

  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double qc = q(c), qd = q(d);
  consider(c, qc);
  consider(d, qd);
  for (int i = 0; i < steps; ++i) {
    if (qc >= qd) {
      b = d;
      d = c;
      qd = qc;
      c = b - kInvPhi * (b - a);
      qc = q(c);
      consider(c, qc);
    } else {
      a = c;
      c = d;
      qc = qd;
      d = a + kInvPhi * (b - a);
      qd = q(d);
      consider(d, qd);
    }
  }
  return best;
}

}  // namespace bloch
