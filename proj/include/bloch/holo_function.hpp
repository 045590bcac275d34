#pragma once

// Holomorphic test functions on the unit ball: finite sums of sparse
// monomials c * x^e and ridge series sum_k c_k <x,u>^k. The class is closed
// under radial differentiation, homogeneous extraction, slicing and
// composition with polynomial disk curves, so every derivative used by the
// estimators is exact.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "disk_series.hpp"
#include "geometry.hpp"

namespace bloch {

struct MonomialTerm {
  std::vector<unsigned> exponents;
  cplx coeff{1.0, 0.0};

  [[nodiscard]] unsigned degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
  }
};

struct RidgeTerm {
  Point direction;            // unit vector u
  std::vector<cplx> coeffs;   // c_0..c_N

  [[nodiscard]] unsigned degree() const {
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      if (coeffs[k] != cplx{}) return static_cast<unsigned>(k);
    }
    return 0;
  }
};

struct FunctionLimits {
  unsigned max_monomial_degree = 16;
  std::size_t max_ridge_truncation = 64;
};

namespace detail {

inline cplx ipow(cplx base, unsigned e) {
  cplx acc{1.0, 0.0};
  while (e != 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

inline cplx monomial_value(const MonomialTerm& m, const Point& x) {
  cplx v = m.coeff;
  for (std::size_t j = 0; j < m.exponents.size(); ++j) {
    if (m.exponents[j] != 0) v *= ipow(x[j], m.exponents[j]);
  }
  return v;
}

// sum_k c_k s^k and sum_k k c_k s^(k-1) in one Horner sweep.
inline std::pair<cplx, cplx> ridge_value_and_slope(const std::vector<cplx>& c, cplx s) {
  cplx p{}, dp{};
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * s + p;
    p = p * s + c[k];
  }
  return {p, dp};
}

}  // namespace detail

class HoloFunction {
 public:
  HoloFunction() = default;
  explicit HoloFunction(std::size_t dim, FunctionLimits limits = {}) : dim_(dim), limits_(limits) {
    if (dim == 0) throw DimensionError("HoloFunction: dimension must be positive");
  }

  // Builders.
  HoloFunction& add(MonomialTerm m) {
    if (m.exponents.size() != dim_) {
      throw DimensionError("monomial has " + std::to_string(m.exponents.size()) +
                           " exponents, function dimension is " + std::to_string(dim_));
    }
    if (m.degree() > limits_.max_monomial_degree) {
      throw std::invalid_argument("monomial degree " + std::to_string(m.degree()) +
                                  " exceeds limit " + std::to_string(limits_.max_monomial_degree));
    }
    monomials_.push_back(std::move(m));
    return *this;
  }

  HoloFunction& add(RidgeTerm r) {
    dim_check(r.direction);
    if (!is_unit(r.direction, 1e-12)) throw DomainError("ridge direction must be a unit vector");
    if (r.coeffs.size() > limits_.max_ridge_truncation + 1) {
      throw std::invalid_argument("ridge truncation " + std::to_string(r.coeffs.size() - 1) +
                                  " exceeds limit " + std::to_string(limits_.max_ridge_truncation));
    }
    ridges_.push_back(std::move(r));
    return *this;
  }

  static HoloFunction constant(std::size_t dim, cplx c) {
    HoloFunction f(dim);
    f.add(MonomialTerm{std::vector<unsigned>(dim, 0u), c});
    return f;
  }

  /// x_j (zero-based axis).
  static HoloFunction coordinate(std::size_t dim, std::size_t axis, cplx c = 1.0) {
    std::vector<unsigned> e(dim, 0u);
    e.at(axis) = 1;
    HoloFunction f(dim);
    f.add(MonomialTerm{std::move(e), c});
    return f;
  }

  /// <x, a> = sum_j x_j conj(a_j); a need not be a unit vector.
  static HoloFunction linear(const Point& a) {
    HoloFunction f(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a[j] == cplx{}) continue;
      std::vector<unsigned> e(a.dim(), 0u);
      e[j] = 1;
      f.add(MonomialTerm{std::move(e), std::conj(a[j])});
    }
    return f;
  }

  /// sum_k coeffs[k] <x,u>^k.
  static HoloFunction ridge(const Point& u, std::vector<cplx> coeffs, FunctionLimits limits = {}) {
    HoloFunction f(u.dim(), limits);
    f.add(RidgeTerm{u, std::move(coeffs)});
    return f;
  }

  /// <x,u>^k.
  static HoloFunction ridge_power(const Point& u, unsigned k) {
    std::vector<cplx> c(k + 1, cplx{});
    c[k] = 1.0;
    return ridge(u, std::move(c));
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const FunctionLimits& limits() const noexcept { return limits_; }
  [[nodiscard]] const std::vector<MonomialTerm>& monomials() const noexcept { return monomials_; }
  [[nodiscard]] const std::vector<RidgeTerm>& ridges() const noexcept { return ridges_; }

  [[nodiscard]] unsigned max_degree() const {
    unsigned d = 0;
    for (const auto& m : monomials_) d = std::max(d, m.degree());
    for (const auto& r : ridges_) d = std::max(d, r.degree());
    return d;
  }

  /// True when every term of positive degree has a zero coefficient.
  [[nodiscard]] bool is_constant() const {
    for (const auto& m : monomials_) {
      if (m.degree() > 0 && m.coeff != cplx{}) return false;
    }
    for (const auto& r : ridges_) {
      if (r.degree() > 0) return false;
    }
    return true;
  }

  /// sum of |coefficients|; bounds sup |f| on the closed ball.
  [[nodiscard]] double coefficient_bound() const {
    double s = 0.0;
    for (const auto& m : monomials_) s += std::abs(m.coeff);
    for (const auto& r : ridges_) {
      for (const auto& c : r.coeffs) s += std::abs(c);
    }
    return s;
  }

  [[nodiscard]] cplx operator()(const Point& x) const { return evaluate(x); }

  [[nodiscard]] cplx evaluate(const Point& x) const {
    dim_check(x);
    cplx v{};
    for (const auto& m : monomials_) v += detail::monomial_value(m, x);
    for (const auto& r : ridges_) v += detail::ridge_value_and_slope(r.coeffs, inner(x, r.direction)).first;
    return v;
  }

  /// Coefficient vector g of the complex-linear form Df(x): Df(x)(w) = sum_j g_j w_j.
  [[nodiscard]] Point gradient(const Point& x) const {
    dim_check(x);
    Point g(dim_);
    for (const auto& m : monomials_) {
      for (std::size_t j = 0; j < dim_; ++j) {
        if (m.exponents[j] == 0) continue;
        cplx v = m.coeff * static_cast<double>(m.exponents[j]);
        for (std::size_t k = 0; k < dim_; ++k) {
          const unsigned e = (k == j) ? m.exponents[k] - 1 : m.exponents[k];
          if (e != 0) v *= detail::ipow(x[k], e);
        }
        g[j] += v;
      }
    }
    for (const auto& r : ridges_) {
      const cplx slope = detail::ridge_value_and_slope(r.coeffs, inner(x, r.direction)).second;
      for (std::size_t j = 0; j < dim_; ++j) g[j] += slope * std::conj(r.direction[j]);
    }
    return g;
  }

  [[nodiscard]] cplx directional_derivative(const Point& x, const Point& w) const {
    dim_check(w);
    const Point g = gradient(x);
    cplx s{};
    for (std::size_t j = 0; j < dim_; ++j) s += g[j] * w[j];
    return s;
  }

  /// Rf(x) = sum_n n P_n(x), computed from term degrees.
  [[nodiscard]] cplx radial_derivative(const Point& x) const {
    dim_check(x);
    cplx v{};
    for (const auto& m : monomials_) {
      const unsigned d = m.degree();
      if (d != 0) v += static_cast<double>(d) * detail::monomial_value(m, x);
    }
    for (const auto& r : ridges_) {
      const cplx s = inner(x, r.direction);
      v += s * detail::ridge_value_and_slope(r.coeffs, s).second;
    }
    return v;
  }

  /// Rf as a function: monomial coefficients scaled by total degree,
  /// ridge coefficient c_k scaled by k.
  [[nodiscard]] HoloFunction radial_derivative_function() const {
    HoloFunction out(dim_, limits_);
    for (const auto& m : monomials_) {
      const unsigned d = m.degree();
      if (d == 0) continue;
      out.monomials_.push_back(MonomialTerm{m.exponents, static_cast<double>(d) * m.coeff});
    }
    for (const auto& r : ridges_) {
      RidgeTerm t{r.direction, r.coeffs};
      for (std::size_t k = 0; k < t.coeffs.size(); ++k) t.coeffs[k] *= static_cast<double>(k);
      out.ridges_.push_back(std::move(t));
    }
    return out;
  }

  /// DRf(x)(y).
  [[nodiscard]] cplx mixed_radial_derivative(const Point& x, const Point& y) const {
    return radial_derivative_function().directional_derivative(x, y);
  }

  /// The k-homogeneous part P_k.
  [[nodiscard]] HoloFunction homogeneous_part(unsigned k) const {
    HoloFunction out(dim_, limits_);
    for (const auto& m : monomials_) {
      if (m.degree() == k) out.monomials_.push_back(m);
    }
    for (const auto& r : ridges_) {
      if (k < r.coeffs.size() && r.coeffs[k] != cplx{}) {
        std::vector<cplx> c(k + 1, cplx{});
        c[k] = r.coeffs[k];
        out.ridges_.push_back(RidgeTerm{r.direction, std::move(c)});
      }
    }
    return out;
  }

  /// f - f(0).
  [[nodiscard]] HoloFunction centered() const {
    HoloFunction out(dim_, limits_);
    for (const auto& m : monomials_) {
      if (m.degree() != 0) out.monomials_.push_back(m);
    }
    for (const auto& r : ridges_) {
      RidgeTerm t = r;
      if (!t.coeffs.empty()) t.coeffs[0] = cplx{};
      out.ridges_.push_back(std::move(t));
    }
    return out;
  }

  HoloFunction& operator*=(cplx s) {
    for (auto& m : monomials_) m.coeff *= s;
    for (auto& r : ridges_) {
      for (auto& c : r.coeffs) c *= s;
    }
    return *this;
  }
  friend HoloFunction operator*(cplx s, HoloFunction f) { return f *= s; }

  /// Sum of two functions on the same space (term lists are concatenated).
  friend HoloFunction operator+(HoloFunction a, const HoloFunction& b) {
    if (a.dim_ != b.dim_) throw DimensionError("cannot add functions of different dimension");
    a.monomials_.insert(a.monomials_.end(), b.monomials_.begin(), b.monomials_.end());
    a.ridges_.insert(a.ridges_.end(), b.ridges_.begin(), b.ridges_.end());
    return a;
  }

  /// Coefficients of z -> f(z y): a_k = P_k(y). Requires |y| = 1.
  [[nodiscard]] DiskSeries slice_series(const Point& y) const {
    dim_check(y);
    if (!is_unit(y, 1e-12)) throw DomainError("slice_series: direction must be a unit vector");
    std::vector<cplx> a(max_degree() + 1, cplx{});
    for (const auto& m : monomials_) a[m.degree()] += detail::monomial_value(m, y);
    for (const auto& r : ridges_) {
      const cplx s = inner(y, r.direction);
      cplx sk{1.0, 0.0};
      for (std::size_t k = 0; k < r.coeffs.size(); ++k, sk *= s) {
        if (k < a.size()) a[k] += r.coeffs[k] * sk;
      }
    }
    return DiskSeries{std::move(a)};
  }

  static constexpr std::size_t kCurveRangeSamples = 4096;

  /// Exact series of z -> f(g(z)) for a polynomial curve g into the closed ball.
  [[nodiscard]] DiskSeries compose_curve(std::span<const DiskSeries> curve) const {
    if (curve.size() != dim_) {
      throw DimensionError("curve has " + std::to_string(curve.size()) + " components, expected " +
                           std::to_string(dim_));
    }
    check_curve_range(curve);

    DiskSeries out;
    for (const auto& m : monomials_) {
      DiskSeries term = DiskSeries::constant(m.coeff);
      for (std::size_t j = 0; j < dim_; ++j) {
        for (unsigned e = 0; e < m.exponents[j]; ++e) term = term * curve[j];
      }
      out += term;
    }
    for (const auto& r : ridges_) {
      DiskSeries s;
      for (std::size_t j = 0; j < dim_; ++j) s += std::conj(r.direction[j]) * curve[j];
      DiskSeries acc;
      for (std::size_t k = r.coeffs.size(); k-- > 0;) {
        acc = acc * s;
        acc += DiskSeries::constant(r.coeffs[k]);
      }
      out += acc;
    }
    return out;
  }

  static void check_curve_range(std::span<const DiskSeries> curve, double tol = 1e-9) {
    for (std::size_t k = 0; k < kCurveRangeSamples; ++k) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / kCurveRangeSamples;
      const cplx z = std::polar(1.0, theta);
      double nsq = 0.0;
      for (const auto& g : curve) nsq += std::norm(g(z));
      if (std::sqrt(nsq) > 1.0 + tol) {
        throw DomainError("compose_curve: curve leaves the closed unit ball (|g| = " +
                          std::to_string(std::sqrt(nsq)) + ")");
      }
    }
  }

 private:
  void dim_check(const Point& x) const {
    if (x.dim() != dim_) {
      throw DimensionError("point has dimension " + std::to_string(x.dim()) + ", function expects " +
                           std::to_string(dim_));
    }
  }

  std::size_t dim_ = 1;
  FunctionLimits limits_{};
  std::vector<MonomialTerm> monomials_;
  std::vector<RidgeTerm> ridges_;
};

/// Evaluates a polynomial curve g: D -> C^n at z.
inline Point curve_point(std::span<const DiskSeries> curve, cplx z) {
  Point p(curve.size());
  for (std::size_t j = 0; j < curve.size(); ++j) p[j] = curve[j](z);
  return p;
}

}  // namespace bloch
