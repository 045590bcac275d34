#pragma once

// Supremum estimators for the Bloch-type seminorms, growth norms and
// difference quotients. Every estimate is the maximum of the target quantity
// over a finite deterministic sample set (plus golden-section refinement
// around the best sample), hence a lower bound of the true supremum.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "holo_function.hpp"
#include "pointwise.hpp"
#include "random.hpp"
#include "sampling.hpp"

namespace bloch {

enum class Kind { S1, S2, S3, S4, Growth, Lip, SWeighted, Normal, Qf, DiskBloch };

/// Boundary weight: (1-|x|)^a or (1-|x|^2)^a.
enum class Convention { OneMinusNorm, OneMinusNormSq };

inline std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::S1: return "S1";
    case Kind::S2: return "S2";
    case Kind::S3: return "S3";
    case Kind::S4: return "S4";
    case Kind::Growth: return "GROWTH";
    case Kind::Lip: return "LIP";
    case Kind::SWeighted: return "SWEIGHTED";
    case Kind::Normal: return "NORMAL";
    case Kind::Qf: return "QF";
    case Kind::DiskBloch: return "DISK_BLOCH";
  }
  return "?";
}

inline std::string_view to_string(Convention c) {
  return c == Convention::OneMinusNorm ? "ONE_MINUS_NORM" : "ONE_MINUS_NORM_SQ";
}

/// The weight each seminorm carries in its defining formula.
inline Convention default_convention(Kind k) {
  switch (k) {
    case Kind::S1:
    case Kind::S2:
    case Kind::Growth:
    case Kind::Lip:
    case Kind::SWeighted:
      return Convention::OneMinusNorm;
    default:
      return Convention::OneMinusNormSq;
  }
}

inline double boundary_weight(double r, double exponent, Convention c) {
  const double base = (c == Convention::OneMinusNorm) ? 1.0 - r : (1.0 - r) * (1.0 + r);
  return std::pow(base, exponent);
}

struct Witness {
  Point x;                  // argmax point, slice direction, or first pair entry
  std::optional<Point> y;   // second pair entry
  std::optional<cplx> z;    // disk point for slice/disk quantities

  [[nodiscard]] double radius() const { return z ? std::abs(*z) : norm(x); }
};

struct SeminormEstimate {
  Kind kind = Kind::S1;
  double alpha = 0.0;
  std::optional<double> lambda;
  double value = 0.0;
  Witness witness;
  SamplingPlan plan;
  Convention convention = Convention::OneMinusNorm;
};

namespace detail {

struct BallMax {
  double value = 0.0;
  Point argmax;
};

// Max of q over r_j * d, then golden refinement in radius along the best
// direction between the neighbouring grid levels. Ties keep the first sample
// in level-major, direction-minor order.
template <class Q>
BallMax maximize_over_ball(std::size_t dim, const SamplingPlan& plan, Q&& q) {
  const auto radii = plan.radii();
  const auto dirs = plan.directions(dim);
  BallMax best{-1.0, Point(dim)};
  std::size_t best_level = 0, best_dir = 0;
  for (std::size_t j = 0; j < radii.size(); ++j) {
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      // All directions coincide at the origin.
      if (radii[j] == 0.0 && k > 0) break;
      const Point x = radii[j] * dirs[k];
      const double v = q(x);
      if (v > best.value) {
        best = {v, x};
        best_level = j;
        best_dir = k;
      }
    }
  }
  if (plan.refine_steps > 0) {
    const double lo = radii[best_level == 0 ? 0 : best_level - 1];
    const double hi = radii[std::min(best_level + 1, radii.size() - 1)];
    const Point& d = dirs[best_dir];
    const auto line = golden_maximize([&](double r) { return q(r * d); }, lo, hi, plan.refine_steps);
    if (line.value > best.value) best = {line.value, line.t * d};
  }
  return best;
}

struct DiskMax {
  double value = 0.0;
  cplx z{};
};

constexpr int kDiskAngles = 64;

template <class Q>
DiskMax maximize_over_disk(const SamplingPlan& plan, Q&& q) {
  const auto radii = plan.radii();
  DiskMax best{-1.0, {}};
  std::size_t best_level = 0;
  double best_theta = 0.0;
  for (std::size_t j = 0; j < radii.size(); ++j) {
    for (int k = 0; k < kDiskAngles; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / kDiskAngles;
      const cplx z = std::polar(radii[j], theta);
      const double v = q(z);
      if (v > best.value) {
        best = {v, z};
        best_level = j;
        best_theta = theta;
      }
    }
  }
  if (plan.refine_steps > 0) {
    const double lo = radii[best_level == 0 ? 0 : best_level - 1];
    const double hi = radii[std::min(best_level + 1, radii.size() - 1)];
    const auto line =
        golden_maximize([&](double r) { return q(std::polar(r, best_theta)); }, lo, hi, plan.refine_steps);
    if (line.value > best.value) best = {line.value, std::polar(line.t, best_theta)};
  }
  return best;
}

}  // namespace detail

/// sup_z w(|z|)^alpha |F'(z)| over the radial grid x 64 angles.
inline SeminormEstimate disk_bloch_norm(const DiskSeries& F, double alpha, const SamplingPlan& plan,
                                        Convention conv = Convention::OneMinusNormSq) {
  if (!(alpha > 0.0)) throw std::invalid_argument("disk_bloch_norm: alpha must be positive");
  const DiskSeries dF = F.derivative();
  const auto best = detail::maximize_over_disk(
      plan, [&](cplx z) { return boundary_weight(std::abs(z), alpha, conv) * std::abs(dF(z)); });
  SeminormEstimate e;
  e.kind = Kind::DiskBloch;
  e.alpha = alpha;
  e.value = std::max(0.0, best.value);
  e.witness = Witness{Point{cplx{1.0, 0.0}}, std::nullopt, best.z};
  e.plan = plan;
  e.convention = conv;
  return e;
}

/// Pointwise integrand of the ball-supremum kinds.
inline double seminorm_integrand(const HoloFunction& f, Kind kind, double alpha, Convention conv,
                                 const Point& x) {
  const double r = norm(x);
  switch (kind) {
    case Kind::S1:
      return boundary_weight(r, alpha, conv) * norm(f.gradient(x));
    case Kind::S2:
      return boundary_weight(r, alpha, conv) * std::abs(f.radial_derivative(x));
    case Kind::S4:
      return boundary_weight(r, alpha - 1.0, conv) * invariant_gradient_norm(f, x);
    case Kind::Growth:
      return boundary_weight(r, alpha, conv) * std::abs(f(x));
    case Kind::Normal: {
      const cplx v = f(x);
      return (1.0 - r * r) * norm(f.gradient(x)) / (1.0 + std::norm(v));
    }
    case Kind::Qf:
      return invariant_gradient_norm(f, x);
    default:
      throw std::invalid_argument("seminorm_integrand: kind " + std::string(to_string(kind)) +
                                  " is not a pointwise supremum");
  }
}

inline void check_estimate_args(const HoloFunction& f, Kind kind, double alpha) {
  switch (kind) {
    case Kind::S1:
    case Kind::S2:
    case Kind::Growth:
      if (!(alpha >= 0.0)) throw std::invalid_argument(std::string(to_string(kind)) + ": alpha must be >= 0");
      break;
    case Kind::S3:
      if (!(alpha > 0.0)) throw std::invalid_argument("S3: alpha must be > 0");
      break;
    case Kind::S4:
      if (!(alpha > 0.0)) throw std::invalid_argument("S4: alpha must be > 0");
      if (f.dim() < 2) {
        throw DimensionError(
            "S4 needs dim >= 2: in dimension 1 the fourth seminorm coincides with the first, use kind 1");
      }
      break;
    case Kind::Normal:
    case Kind::Qf:
      break;
    default:
      throw std::invalid_argument("estimate_seminorm does not handle kind " + std::string(to_string(kind)));
  }
}

inline SeminormEstimate estimate_seminorm(const HoloFunction& f, Kind kind, double alpha, const SamplingPlan& plan,
                                          std::optional<Convention> convention = std::nullopt) {
  plan.validate();
  check_estimate_args(f, kind, alpha);
  const Convention conv = convention.value_or(default_convention(kind));

  SeminormEstimate e;
  e.kind = kind;
  e.alpha = alpha;
  e.plan = plan;
  e.convention = conv;

  if (kind == Kind::S3) {
    double best = -1.0;
    for (const auto& y : plan.directions(f.dim())) {
      const auto d = disk_bloch_norm(f.slice_series(y), alpha, plan, conv);
      if (d.value > best) {
        best = d.value;
        e.witness = Witness{y, std::nullopt, d.witness.z};
      }
    }
    e.value = std::max(0.0, best);
    return e;
  }

  const auto best = detail::maximize_over_ball(
      f.dim(), plan, [&](const Point& x) { return seminorm_integrand(f, kind, alpha, conv, x); });
  e.value = std::max(0.0, best.value);
  e.witness = Witness{best.argmax, std::nullopt, std::nullopt};
  return e;
}

using PointPair = std::pair<Point, Point>;

/// Deterministic pair set for the difference quotients:
///  - collinear grid pairs (r_i d, r_j d) and (r_i d, -r_j d);
///  - near-diagonal pairs (x, x + t v), t in {1e-2, 1e-4, 1e-6}, with v radial
///    (stepping inward) or a seeded tangent-ish unit vector;
///  - `pair_samples` seeded random pairs.
inline std::vector<PointPair> quotient_pairs(std::size_t dim, const SamplingPlan& plan) {
  const auto radii = plan.radii();
  const auto dirs = plan.directions(dim);
  std::vector<PointPair> pairs;

  for (const auto& d : dirs) {
    for (std::size_t i = 0; i < radii.size(); ++i) {
      for (std::size_t j = i; j < radii.size(); ++j) {
        if (j > i) pairs.emplace_back(radii[i] * d, radii[j] * d);
        if (radii[j] > 0.0) pairs.emplace_back(radii[i] * d, -radii[j] * d);
      }
    }
  }

  Rng rng(plan.stream(0x70616972ULL, dim));
  constexpr double kSteps[] = {1e-2, 1e-4, 1e-6};
  for (const auto& d : dirs) {
    for (double r : radii) {
      const Point x = r * d;
      const Point v = rng.sphere(dim);
      for (double t : kSteps) {
        pairs.emplace_back(x, r >= t ? x - t * d : x + t * d);
        Point y = x + t * v;
        if (norm_sq(y) < 1.0) pairs.emplace_back(x, std::move(y));
      }
    }
  }

  const double rmax = plan.max_radius();
  for (int k = 0; k < plan.pair_samples; ++k) {
    Point x = random_ball_point(rng, dim, rmax);
    Point y = random_ball_point(rng, dim, rmax);
    if (norm_sq(x - y) > 0.0) pairs.emplace_back(std::move(x), std::move(y));
  }
  return pairs;
}

/// sup |f(x) - f(y)| / |x - y|^alpha over the quotient pair set.
inline SeminormEstimate lipschitz_quotient(const HoloFunction& f, double alpha, const SamplingPlan& plan) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("lipschitz_quotient: alpha must lie in (0, 1]");
  SeminormEstimate e;
  e.kind = Kind::Lip;
  e.alpha = alpha;
  e.plan = plan;
  e.convention = Convention::OneMinusNorm;
  double best = -1.0;
  for (const auto& [x, y] : quotient_pairs(f.dim(), plan)) {
    const double dist = norm(x - y);
    if (dist == 0.0) continue;
    const double q = std::abs(f(x) - f(y)) / std::pow(dist, alpha);
    if (q > best) {
      best = q;
      e.witness = Witness{x, y, std::nullopt};
    }
  }
  e.value = std::max(0.0, best);
  return e;
}

/// sup (1-|x|)^lambda (1-|y|)^(alpha-lambda) |f(x) - f(y)| / |x - y|, with
/// each pair taken in both orders so that (alpha, lambda) and
/// (alpha, alpha - lambda) see the same sample set.
inline SeminormEstimate weighted_quotient(const HoloFunction& f, double alpha, double lambda,
                                          const SamplingPlan& plan) {
  if (!(lambda >= 0.0 && lambda <= alpha)) {
    throw std::invalid_argument("weighted_quotient: need 0 <= lambda <= alpha");
  }
  SeminormEstimate e;
  e.kind = Kind::SWeighted;
  e.alpha = alpha;
  e.lambda = lambda;
  e.plan = plan;
  e.convention = Convention::OneMinusNorm;
  double best = -1.0;
  for (const auto& [x, y] : quotient_pairs(f.dim(), plan)) {
    const double dist = norm(x - y);
    if (dist == 0.0) continue;
    const double diff = std::abs(f(x) - f(y)) / dist;
    const double rx = norm(x), ry = norm(y);
    const double q1 = std::pow(1.0 - rx, lambda) * std::pow(1.0 - ry, alpha - lambda) * diff;
    const double q2 = std::pow(1.0 - ry, lambda) * std::pow(1.0 - rx, alpha - lambda) * diff;
    if (q1 > best) {
      best = q1;
      e.witness = Witness{x, y, std::nullopt};
    }
    if (q2 > best) {
      best = q2;
      e.witness = Witness{y, x, std::nullopt};
    }
  }
  e.value = std::max(0.0, best);
  return e;
}

}  // namespace bloch
