#pragma once

// Hermitian geometry of the unit ball in C^n: points, inner products,
// orthogonal splits and the involutive ball automorphisms.

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bloch {

using cplx = std::complex<double>;

/// Thrown when two operands live in spaces of different dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a point violates a ball/sphere precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A vector of C^n. Whether it is an interior point or a boundary
/// direction is up to the operation consuming it.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim, cplx{0.0, 0.0}) {}
  Point(std::initializer_list<cplx> coords) : coords_(coords) {}
  explicit Point(std::vector<cplx> coords) : coords_(std::move(coords)) {}

  static Point unit(std::size_t dim, std::size_t axis) {
    Point e(dim);
    e.coords_.at(axis) = 1.0;
    return e;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
  [[nodiscard]] std::span<const cplx> coords() const noexcept { return coords_; }

  cplx& operator[](std::size_t i) { return coords_[i]; }
  const cplx& operator[](std::size_t i) const { return coords_[i]; }

  [[nodiscard]] auto begin() const noexcept { return coords_.begin(); }
  [[nodiscard]] auto end() const noexcept { return coords_.end(); }

  Point& operator+=(const Point& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Point& operator-=(const Point& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Point& operator*=(cplx s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(cplx s, Point a) { return a *= s; }
  friend Point operator*(Point a, cplx s) { return a *= s; }
  friend Point operator-(Point a) { return a *= -1.0; }

  friend bool operator==(const Point&, const Point&) = default;

  void require_same_dim(const Point& o) const {
    if (o.dim() != dim()) {
      throw DimensionError("dimension mismatch: " + std::to_string(dim()) + " vs " +
                           std::to_string(o.dim()));
    }
  }

 private:
  std::vector<cplx> coords_;
};

/// <x, y> = sum_j x_j conj(y_j); linear in the first slot.
inline cplx inner(const Point& x, const Point& y) {
  x.require_same_dim(y);
  cplx s{0.0, 0.0};
  for (std::size_t j = 0; j < x.dim(); ++j) s += x[j] * std::conj(y[j]);
  return s;
}

inline double norm_sq(const Point& x) {
  double s = 0.0;
  for (const auto& c : x) s += std::norm(c);
  return s;
}

inline double norm(const Point& x) { return std::sqrt(norm_sq(x)); }

inline Point normalized(const Point& x) {
  const double n = norm(x);
  if (n == 0.0) throw DomainError("cannot normalize the zero vector");
  return (1.0 / n) * x;
}

inline bool is_unit(const Point& y, double tol = 1e-12) { return std::abs(norm(y) - 1.0) <= tol; }

inline void require_interior(const Point& x, const char* what) {
  if (!(norm_sq(x) < 1.0)) {
    throw DomainError(std::string(what) + ": point must lie in the open unit ball");
  }
}

struct Decomposition {
  Point parallel;    // complex multiple of the axis
  Point orthogonal;  // <orthogonal, axis> = 0
};

/// Splits c = (<c,x>/|x|^2) x + remainder.
inline Decomposition decompose(const Point& c, const Point& x) {
  c.require_same_dim(x);
  const double xx = norm_sq(x);
  if (xx == 0.0) throw DomainError("decompose: axis vector is zero");
  Point parallel = (inner(c, x) / xx) * x;
  Point orthogonal = c - parallel;
  return {std::move(parallel), std::move(orthogonal)};
}

/// (1-|x|^2)|w|^2 + |<w,x>|^2, the quadratic form in the invariant
/// gradient's denominator.
inline double quadratic_denominator(const Point& x, const Point& w) {
  require_interior(x, "quadratic_denominator");
  return (1.0 - norm_sq(x)) * norm_sq(w) + std::norm(inner(w, x));
}

/// The involutive automorphism phi_a of the ball exchanging 0 and a:
///   phi_a(x) = (a - P_a x - s_a Q_a x) / (1 - <x,a>),  s_a = sqrt(1-|a|^2),
/// with P_a the orthogonal projection onto span(a) and Q_a = I - P_a.
class MobiusMap {
 public:
  explicit MobiusMap(Point base) : base_(std::move(base)), base_norm_sq_(norm_sq(base_)) {
    if (!(base_norm_sq_ < 1.0)) throw DomainError("MobiusMap: base point must lie in the open ball");
    s_ = std::sqrt(1.0 - base_norm_sq_);
  }

  [[nodiscard]] const Point& base() const noexcept { return base_; }
  [[nodiscard]] double s() const noexcept { return s_; }
  [[nodiscard]] std::size_t dim() const noexcept { return base_.dim(); }

  [[nodiscard]] Point apply(const Point& x) const {
    base_.require_same_dim(x);
    require_interior(x, "mobius_apply");
    if (base_norm_sq_ == 0.0) return -x;

    const cplx xa = inner(x, base_);
    const cplx denom = 1.0 - xa;
    if (std::abs(denom) == 0.0) throw DomainError("mobius_apply: 1 - <x,a> vanished");

    const Point proj = (xa / base_norm_sq_) * base_;
    const Point rest = x - proj;
    Point out = base_ - proj - s_ * rest;
    return (1.0 / denom) * out;
  }

 private:
  Point base_;
  double base_norm_sq_ = 0.0;
  double s_ = 1.0;
};

inline Point mobius_apply(const MobiusMap& m, const Point& x) { return m.apply(x); }

}  // namespace bloch
