#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "disk_series.hpp"
#include "geometry.hpp"
#include "holo_function.hpp"
#include "random.hpp"
#include "sampling.hpp"

namespace bloch {

enum class FamilyName { RandomPoly, Coordinate, RidgePower, RidgeLog, RidgePowerBeta };

inline std::string_view to_string(FamilyName n) {
  switch (n) {
    case FamilyName::RandomPoly: return "RANDOM_POLY";
    case FamilyName::Coordinate: return "COORDINATE";
    case FamilyName::RidgePower: return "RIDGE_POWER";
    case FamilyName::RidgeLog: return "RIDGE_LOG";
    case FamilyName::RidgePowerBeta: return "RIDGE_POWERBETA";
  }
  return "?";
}

/// Deterministic description of a test-function family. Ridge families use
/// the direction e_1, which is always among the sampling axes.
struct FamilySpec {
  FamilyName name = FamilyName::RandomPoly;
  std::size_t dim = 3;
  unsigned degree = 6;          // RANDOM_POLY max total degree; RIDGE_POWER max power
  std::size_t truncation = 64;  // ridge series length N
  std::size_t count = 20;       // RANDOM_POLY only
  std::size_t terms = 8;        // monomials per RANDOM_POLY function
  double beta = 0.5;            // RIDGE_POWERBETA exponent in (1 - z)^(-beta)
  std::uint64_t seed = 42;

  static FamilySpec random_poly(std::size_t dim, unsigned degree, std::size_t count, std::uint64_t seed) {
    FamilySpec s;
    s.name = FamilyName::RandomPoly;
    s.dim = dim;
    s.degree = degree;
    s.count = count;
    s.seed = seed;
    return s;
  }
  static FamilySpec coordinate(std::size_t dim) {
    FamilySpec s;
    s.name = FamilyName::Coordinate;
    s.dim = dim;
    return s;
  }
  static FamilySpec ridge_power(std::size_t dim, unsigned max_power) {
    FamilySpec s;
    s.name = FamilyName::RidgePower;
    s.dim = dim;
    s.degree = max_power;
    return s;
  }
  static FamilySpec ridge_log(std::size_t dim, std::size_t truncation = 64) {
    FamilySpec s;
    s.name = FamilyName::RidgeLog;
    s.dim = dim;
    s.truncation = truncation;
    return s;
  }
  static FamilySpec ridge_power_beta(std::size_t dim, double beta, std::size_t truncation = 64) {
    FamilySpec s;
    s.name = FamilyName::RidgePowerBeta;
    s.dim = dim;
    s.beta = beta;
    s.truncation = truncation;
    return s;
  }

  [[nodiscard]] std::string label() const {
    std::string l(to_string(name));
    l += "(n=" + std::to_string(dim);
    switch (name) {
      case FamilyName::RandomPoly:
        l += ",deg=" + std::to_string(degree) + ",count=" + std::to_string(count) + ",seed=" + std::to_string(seed);
        break;
      case FamilyName::RidgePower:
        l += ",k<=" + std::to_string(degree);
        break;
      case FamilyName::RidgeLog:
        l += ",N=" + std::to_string(truncation);
        break;
      case FamilyName::RidgePowerBeta: {
        char buf[32];
        std::snprintf(buf, sizeof buf, ",beta=%g", beta);
        l += buf;
        l += ",N=" + std::to_string(truncation);
        break;
      }
      case FamilyName::Coordinate:
        break;
    }
    return l + ")";
  }

  [[nodiscard]] std::string member_label(std::size_t i) const { return label() + "#" + std::to_string(i); }
};

/// Coefficients of (1 - z)^(-beta) up to z^N.
inline std::vector<cplx> binomial_series(double beta, std::size_t n) {
  std::vector<cplx> c(n + 1);
  double ck = 1.0;
  c[0] = ck;
  for (std::size_t k = 1; k <= n; ++k) {
    ck *= (beta + static_cast<double>(k) - 1.0) / static_cast<double>(k);
    c[k] = ck;
  }
  return c;
}

inline std::vector<HoloFunction> generate_family(const FamilySpec& spec) {
  if (spec.dim == 0) throw std::invalid_argument("family dimension must be positive");
  std::vector<HoloFunction> out;
  const Point e1 = Point::unit(spec.dim, 0);
  switch (spec.name) {
    case FamilyName::RandomPoly: {
      if (spec.degree == 0 || spec.degree > FunctionLimits{}.max_monomial_degree) {
        throw std::invalid_argument("RANDOM_POLY degree must be in [1, 16]");
      }
      if (spec.count == 0 || spec.terms == 0) throw std::invalid_argument("RANDOM_POLY needs count, terms > 0");
      Rng rng(SamplingPlan::splitmix(spec.seed ^ 0x706f6c79ULL));
      for (std::size_t i = 0; i < spec.count; ++i) {
        HoloFunction f(spec.dim);
        for (std::size_t t = 0; t < spec.terms; ++t) {
          // The first term has positive degree so no member is constant.
          const unsigned lo = (t == 0) ? 1u : 0u;
          const auto deg = static_cast<unsigned>(lo + rng.below(spec.degree - lo + 1));
          std::vector<unsigned> e(spec.dim, 0u);
          for (unsigned k = 0; k < deg; ++k) ++e[rng.below(spec.dim)];
          f.add(MonomialTerm{std::move(e), rng.disk()});
        }
        out.push_back(std::move(f));
      }
      break;
    }
    case FamilyName::Coordinate:
      for (std::size_t j = 0; j < spec.dim; ++j) out.push_back(HoloFunction::coordinate(spec.dim, j));
      break;
    case FamilyName::RidgePower:
      if (spec.degree == 0) throw std::invalid_argument("RIDGE_POWER needs a positive max power");
      for (unsigned k = 1; k <= spec.degree; ++k) out.push_back(HoloFunction::ridge_power(e1, k));
      break;
    case FamilyName::RidgeLog: {
      std::vector<cplx> c(spec.truncation + 1, cplx{});
      for (std::size_t k = 1; k <= spec.truncation; ++k) c[k] = 1.0 / static_cast<double>(k);
      out.push_back(HoloFunction::ridge(e1, std::move(c)));
      break;
    }
    case FamilyName::RidgePowerBeta:
      if (spec.beta == 0.0) throw std::invalid_argument("RIDGE_POWERBETA needs beta != 0");
      out.push_back(HoloFunction::ridge(e1, binomial_series(spec.beta, spec.truncation)));
      break;
  }
  return out;
}

using Curve = std::vector<DiskSeries>;

/// z -> z u.
inline Curve axis_curve(const Point& u) {
  Curve g;
  for (const auto& c : u) g.push_back(DiskSeries{cplx{}, c});
  return g;
}

/// Seeded polynomial curves g(z) = sum_k b_k z^k with sum_k |b_k| = radius,
/// so |g(z)| <= radius on the closed disk.
inline std::vector<Curve> random_curves(std::size_t dim, std::size_t count, std::size_t degree, double radius,
                                        std::uint64_t seed) {
  Rng rng(SamplingPlan::splitmix(seed ^ 0x6375727665ULL));
  std::vector<Curve> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Point> b;
    double total = 0.0;
    for (std::size_t k = 0; k <= degree; ++k) {
      Point p(dim);
      for (std::size_t j = 0; j < dim; ++j) p[j] = cplx{rng.normal(), rng.normal()};
      total += norm(p);
      b.push_back(std::move(p));
    }
    Curve g(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<cplx> coeffs(degree + 1);
      for (std::size_t k = 0; k <= degree; ++k) coeffs[k] = b[k][j] * (radius / total);
      g[j] = DiskSeries{std::move(coeffs)};
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace bloch
