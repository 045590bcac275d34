#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace bloch {

/// Truncated power series a_0 + a_1 z + ... + a_M z^M on the unit disk.
/// Evaluation and differentiation are exact for the stored truncation.
class DiskSeries {
 public:
  static constexpr std::size_t kMaxCoefficients = 4096;

  DiskSeries() = default;
  explicit DiskSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {}
  DiskSeries(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) {}

  static DiskSeries constant(cplx c) { return DiskSeries{std::vector<cplx>{c}}; }
  static DiskSeries monomial(std::size_t k, cplx c = 1.0) {
    std::vector<cplx> v(k + 1, cplx{});
    v[k] = c;
    return DiskSeries{std::move(v)};
  }

  [[nodiscard]] const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] bool empty() const noexcept { return coeffs_.empty(); }

  [[nodiscard]] cplx coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }

  [[nodiscard]] cplx operator()(cplx z) const {
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  [[nodiscard]] DiskSeries derivative() const {
    if (coeffs_.size() <= 1) return DiskSeries{};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return DiskSeries{std::move(d)};
  }

  /// F'(z) by Horner on the differentiated coefficients.
  [[nodiscard]] cplx derivative_at(cplx z) const {
    cplx acc{};
    for (std::size_t k = coeffs_.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * coeffs_[k];
    return acc;
  }

  DiskSeries& operator+=(const DiskSeries& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  DiskSeries& operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend DiskSeries operator+(DiskSeries a, const DiskSeries& b) { return a += b; }
  friend DiskSeries operator*(cplx s, DiskSeries a) { return a *= s; }

  /// Cauchy product; throws std::length_error past kMaxCoefficients.
  friend DiskSeries operator*(const DiskSeries& a, const DiskSeries& b) {
    if (a.empty() || b.empty()) return DiskSeries{};
    const std::size_t n = a.size() + b.size() - 1;
    if (n > kMaxCoefficients) {
      throw std::length_error("DiskSeries product needs " + std::to_string(n) +
                              " coefficients (cap " + std::to_string(kMaxCoefficients) + ")");
    }
    std::vector<cplx> out(n, cplx{});
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == cplx{}) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DiskSeries{std::move(out)};
  }

  /// Drops trailing exact zeros.
  [[nodiscard]] DiskSeries trimmed() const {
    auto v = coeffs_;
    while (!v.empty() && v.back() == cplx{}) v.pop_back();
    return DiskSeries{std::move(v)};
  }

 private:
  std::vector<cplx> coeffs_;
};

}  // namespace bloch
