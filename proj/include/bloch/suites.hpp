#pragma once

// Check registry for `verify --suite`. Each suite fixes its families,
// parameters and windows; only the seed and the plan vary per invocation.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "families.hpp"
#include "harness.hpp"
#include "holo_function.hpp"
#include "sampling.hpp"

namespace bloch {

inline constexpr std::array<std::string_view, 9> kSuiteNames = {
    "identities", "integral", "equivalence", "t-alpha", "schlicht",
    "hardy-littlewood", "growth", "dai", "derivative-growth"};

inline bool is_suite_name(std::string_view s) {
  if (s == "all") return true;
  for (auto n : kSuiteNames) {
    if (n == s) return true;
  }
  return false;
}

/// Q_f of <x,u>^2: max of 2t(1 - t^2) over t in [0, 1].
inline double qf_ridge_square() { return 4.0 / (3.0 * std::sqrt(3.0)); }

inline FamilySpec suite_random_poly(std::uint64_t seed) { return FamilySpec::random_poly(3, 6, 20, seed); }

inline std::vector<CheckResult> run_suite(std::string_view name, std::uint64_t seed, const SamplingPlan& plan) {
  plan.validate();
  std::vector<CheckResult> out;
  const FamilySpec poly = suite_random_poly(seed);

  if (name == "all") {
    for (auto n : kSuiteNames) {
      auto part = run_suite(n, seed, plan);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  if (name == "identities") {
    for (const auto& fam : {poly, FamilySpec::coordinate(2), FamilySpec::ridge_power(2, 4), FamilySpec::ridge_log(2),
                            FamilySpec::ridge_power_beta(2, 0.5)}) {
      out.push_back(check_pointwise_identities(fam, plan));
    }
  } else if (name == "integral") {
    out.push_back(check_integral_family(poly, 10, plan));
  } else if (name == "equivalence") {
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (const auto& fam : {poly, FamilySpec::coordinate(2), FamilySpec::ridge_power(2, 4), FamilySpec::ridge_log(2)}) {
        out.push_back(check_equivalence(fam, alpha, plan));
      }
    }
  } else if (name == "t-alpha") {
    for (double alpha : {0.25, 0.5, 1.0}) out.push_back(check_t_alpha(alpha, plan, poly));
  } else if (name == "schlicht") {
    const std::size_t n = 3;
    const Point u = Point::unit(n, 0);
    auto curves = random_curves(n, 10, 3, 0.99, seed);
    curves.push_back(axis_curve(u));
    const std::size_t axis = curves.size() - 1;
    out.push_back(check_schlicht_pick(HoloFunction::linear(u), 1.0, curves, plan, "<x,u>", axis));
    out.push_back(
        check_schlicht_pick(HoloFunction::ridge_power(u, 2), qf_ridge_square(), curves, plan, "<x,u>^2", axis));
  } else if (name == "hardy-littlewood") {
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
      for (const auto& fam : {poly, FamilySpec::ridge_power(3, 3), FamilySpec::ridge_power_beta(3, -alpha)}) {
        out.push_back(check_hardy_littlewood(fam, alpha, plan));
      }
    }
  } else if (name == "growth") {
    for (double alpha : {1.5, 2.0}) {
      for (const auto& fam : {FamilySpec::ridge_log(3), FamilySpec::ridge_power_beta(3, alpha - 1.0), poly}) {
        out.push_back(check_growth_equiv(fam, alpha, plan));
      }
    }
  } else if (name == "dai") {
    constexpr std::array<std::array<double, 2>, 5> kRegions = {
        {{2.0, 0.5}, {2.0, 1.5}, {3.0, 1.5}, {1.5, 0.25}, {1.5, 1.25}}};
    for (const auto& [alpha, lambda] : kRegions) {
      for (const auto& fam : {poly, FamilySpec::ridge_power(3, 3)}) out.push_back(check_dai(fam, alpha, lambda, plan));
    }
    for (const auto& [alpha, lambda] : std::array<std::array<double, 2>, 2>{{{1.0, 0.0}, {2.0, 2.0}}}) {
      for (const auto& fam : {FamilySpec::ridge_power(3, 3), FamilySpec::coordinate(3), poly}) {
        out.push_back(check_dai(fam, alpha, lambda, plan));
      }
    }
  } else if (name == "derivative-growth") {
    for (double alpha : {0.5, 1.0}) {
      for (const auto& fam : {FamilySpec::coordinate(2), FamilySpec::ridge_power_beta(2, alpha), poly}) {
        out.push_back(check_derivative_growth(fam, alpha, plan));
      }
    }
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace bloch
