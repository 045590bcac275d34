#pragma once

// Pointwise differential quantities. The invariant gradient norm
//   |grad~ f(x)| = sup_w |Df(x)(w)| (1-|x|^2) / sqrt((1-|x|^2)|w|^2 + |<w,x>|^2)
// is computed three ways: by eigen-decomposition of the quadratic form
// (closed form), by direct search over w (oracle) and by differentiating
// f o phi_x at the origin (finite differences through the Mobius map).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "geometry.hpp"
#include "holo_function.hpp"
#include "random.hpp"
#include "sampling.hpp"

namespace bloch {

struct PointDiff {
  cplx value{};
  Point grad;
  double grad_norm = 0.0;
  cplx radial{};
  double invgrad_norm = 0.0;
};

/// c = conj(g), so that Df(x)(w) = <w, c>.
inline Point dual_vector(const Point& grad) {
  Point c(grad.dim());
  for (std::size_t j = 0; j < grad.dim(); ++j) c[j] = std::conj(grad[j]);
  return c;
}

/// sqrt((1-r^2)^2 |c_par|^2 + (1-r^2) |c_perp|^2) with c split along x.
inline double invariant_gradient_norm_from_grad(const Point& grad, const Point& x) {
  require_interior(x, "invariant_gradient_norm");
  const Point c = dual_vector(grad);
  const double rr = norm_sq(x);
  if (rr == 0.0) return norm(c);
  const double t = 1.0 - rr;
  const auto [par, perp] = decompose(c, x);
  return std::sqrt(t * t * norm_sq(par) + t * norm_sq(perp));
}

inline double invariant_gradient_norm(const HoloFunction& f, const Point& x) {
  return invariant_gradient_norm_from_grad(f.gradient(x), x);
}

/// Algebraic form sqrt((1-r^2)(|Df(x)|^2 - |Rf(x)|^2)); no split along x needed.
inline double invariant_gradient_norm_algebraic(const HoloFunction& f, const Point& x) {
  require_interior(x, "invariant_gradient_norm_algebraic");
  const double gg = norm_sq(f.gradient(x));
  const double rf = std::norm(f.radial_derivative(x));
  return std::sqrt(std::max(0.0, (1.0 - norm_sq(x)) * (gg - rf)));
}

/// Ratio maximized by the invariant gradient, for one direction w.
inline double invariant_gradient_ratio(const Point& grad, const Point& x, const Point& w) {
  const double den = quadratic_denominator(x, w);
  if (den <= 0.0) return 0.0;
  cplx dfw{};
  for (std::size_t j = 0; j < grad.dim(); ++j) dfw += grad[j] * w[j];
  return std::abs(dfw) * (1.0 - norm_sq(x)) / std::sqrt(den);
}

/// Direct search over w: seeded unit vectors, the radial and tangential parts
/// of c, then a golden-section sweep over the real span of those two parts.
inline double invariant_gradient_oracle(const HoloFunction& f, const Point& x, const SamplingPlan& plan) {
  require_interior(x, "invariant_gradient_oracle");
  const Point g = f.gradient(x);
  const Point c = dual_vector(g);
  double best = 0.0;
  auto consider = [&](const Point& w) { best = std::max(best, invariant_gradient_ratio(g, x, w)); };

  Rng rng(plan.stream(0x6f7261636c65ULL, x.dim()));
  for (int k = 0; k < plan.pair_samples; ++k) consider(rng.sphere(x.dim()));
  if (norm_sq(c) == 0.0) return best;
  consider(c);
  if (norm_sq(x) == 0.0) return best;

  const auto [par, perp] = decompose(c, x);
  const double np = norm(par), nq = norm(perp);
  if (np > 0.0) consider(par);
  if (nq > 0.0) consider(perp);
  if (np > 0.0 && nq > 0.0) {
    const Point up = (1.0 / np) * par;
    const Point uq = (1.0 / nq) * perp;
    auto along = [&](double theta) {
      return invariant_gradient_ratio(g, x, std::cos(theta) * up + std::sin(theta) * uq);
    };
    best = std::max(best, golden_maximize(along, 0.0, std::numbers::pi / 2, std::max(plan.refine_steps, 60)).value);
  }
  return best;
}

/// |D(f o phi_x)(0)| by central differences along each coordinate axis.
inline double invariant_gradient_fd(const HoloFunction& f, const Point& x, double h) {
  require_interior(x, "invariant_gradient_fd");
  if (!(h > 0.0 && h <= 1e-4)) throw std::invalid_argument("invariant_gradient_fd: step must lie in (0, 1e-4]");
  const MobiusMap phi(x);
  double nsq = 0.0;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const Point e = Point::unit(x.dim(), j);
    const cplx d = (f(phi.apply(h * e)) - f(phi.apply(-h * e))) / (2.0 * h);
    nsq += std::norm(d);
  }
  return std::sqrt(nsq);
}

inline PointDiff point_diff(const HoloFunction& f, const Point& x) {
  require_interior(x, "point_diff");
  PointDiff d;
  d.value = f(x);
  d.grad = f.gradient(x);
  d.grad_norm = norm(d.grad);
  d.radial = f.radial_derivative(x);
  d.invgrad_norm = invariant_gradient_norm_from_grad(d.grad, x);
  return d;
}

/// sup over unit y orthogonal to x of |Df(x)(y)|; at x = 0 every y qualifies.
inline double tangential_derivative_norm(const Point& grad, const Point& x) {
  const Point c = dual_vector(grad);
  if (norm_sq(x) == 0.0) return norm(c);
  return norm(decompose(c, x).orthogonal);
}

}  // namespace bloch
