#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bloch {

/// Gauss-Legendre rule with m nodes on [-1, 1]; exact for polynomials of
/// degree <= 2m - 1. Nodes from Newton iteration on the three-term
/// recurrence, started at the Tricomi approximation.
class GaussLegendre {
 public:
  explicit GaussLegendre(std::size_t m) : nodes_(m), weights_(m) {
    if (m == 0) throw std::invalid_argument("GaussLegendre: need at least one node");
    const double n = static_cast<double>(m);
    // Returns P_m'(x); leaves P_m(x) in pm.
    auto legendre = [m, n](double x, double& pm) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= m; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      pm = p1;
      return n * (x * p1 - p0) / (x * x - 1.0);
    };
    for (std::size_t i = 0; i < (m + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
      double pm = 0.0;
      for (int it = 0; it < 100; ++it) {
        const double dx = [&] { const double d = legendre(x, pm); return pm / d; }();
        x -= dx;
        if (std::abs(dx) <= 1e-16) break;
      }
      const double dp = legendre(x, pm);
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      nodes_[i] = -x;
      nodes_[m - 1 - i] = x;
      weights_[i] = w;
      weights_[m - 1 - i] = w;
    }
    if (m % 2 == 1) nodes_[m / 2] = 0.0;
  }

  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] const std::vector<double>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }

  /// Integral of f over [a, b].
  template <class F>
  auto integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    decltype(f(a)) acc{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(mid + half * nodes_[i]);
    return half * acc;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace bloch
