#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "bloch/families.hpp"
#include "bloch/holo_function.hpp"
#include "bloch/seminorms.hpp"

using namespace bloch;

namespace {

/// Dense-grid maximum of a one-variable function on [0, hi].
double dense_max(const std::function<double(double)>& g, double hi = 1.0, int n = 2'000'000) {
  double best = 0.0;
  for (int i = 0; i <= n; ++i) best = std::max(best, g(hi * i / n));
  return best;
}

SamplingPlan no_refine(SamplingPlan p = {}) {
  p.refine_steps = 0;
  return p;
}

const double kFourOverThreeRootThree = 4.0 / (3.0 * std::sqrt(3.0));

}  // namespace

TEST(BoundaryWeight, Conventions) {
  EXPECT_DOUBLE_EQ(boundary_weight(0.5, 1.0, Convention::OneMinusNorm), 0.5);
  EXPECT_DOUBLE_EQ(boundary_weight(0.5, 1.0, Convention::OneMinusNormSq), 0.75);
  EXPECT_DOUBLE_EQ(boundary_weight(0.3, 0.0, Convention::OneMinusNormSq), 1.0);
  EXPECT_EQ(default_convention(Kind::S1), Convention::OneMinusNorm);
  EXPECT_EQ(default_convention(Kind::S4), Convention::OneMinusNormSq);
}

// ---------------------------------------------------------------------------
// Closed-form values

TEST(ClosedForm, LinearFunctionS1IsNormOfCoefficient) {
  const Point a{cplx{0.3, -0.4}, cplx{0.0, 1.2}, cplx{-0.5, 0}};
  const auto f = HoloFunction::linear(a);
  for (double alpha : {0.5, 1.0, 2.0}) {
    const auto e = estimate_seminorm(f, Kind::S1, alpha, SamplingPlan{});
    EXPECT_NEAR(e.value, norm(a), 1e-6) << "alpha=" << alpha;
  }
}

TEST(ClosedForm, RidgeSquareS1) {
  const auto f = HoloFunction::ridge_power(Point::unit(3, 0), 2);
  const auto e = estimate_seminorm(f, Kind::S1, 1.0, SamplingPlan{});
  EXPECT_NEAR(e.value, 0.5, 1e-3);
  EXPECT_NEAR(e.witness.radius(), 0.5, 1e-3);
}

TEST(ClosedForm, GrowthOfLinearRidge) {
  const auto f = HoloFunction::linear(Point::unit(3, 1));
  const auto e = estimate_seminorm(f, Kind::Growth, 1.0, SamplingPlan{});
  EXPECT_NEAR(e.value, 0.25, 1e-3);
}

TEST(ClosedForm, DiskBlochNormOfSquare) {
  const auto e = disk_bloch_norm(DiskSeries::monomial(2), 1.0, SamplingPlan{});
  EXPECT_NEAR(e.value, kFourOverThreeRootThree, 1e-3);
  EXPECT_NEAR(e.witness.radius(), 1.0 / std::sqrt(3.0), 1e-3);
  EXPECT_NEAR(disk_bloch_norm(DiskSeries::monomial(1), 1.0, SamplingPlan{}).value, 1.0, 1e-12);
}

TEST(ClosedForm, CoordinateS1OverS2IsFour) {
  const auto f = HoloFunction::coordinate(2, 1);
  const auto s1 = estimate_seminorm(f, Kind::S1, 1.0, SamplingPlan{});
  const auto s2 = estimate_seminorm(f, Kind::S2, 1.0, SamplingPlan{});
  EXPECT_NEAR(s1.value, 1.0, 1e-12);
  EXPECT_NEAR(s2.value, 0.25, 1e-6);
  EXPECT_NEAR(s1.value / s2.value, 4.0, 1e-4);
}

TEST(ClosedForm, InvariantQuantities) {
  const Point u = Point::unit(3, 0);
  EXPECT_NEAR(estimate_seminorm(HoloFunction::linear(u), Kind::Qf, 1.0, SamplingPlan{}).value, 1.0, 1e-12);
  EXPECT_NEAR(estimate_seminorm(HoloFunction::ridge_power(u, 2), Kind::Qf, 1.0, SamplingPlan{}).value,
              kFourOverThreeRootThree, 1e-3);
  // S4 at alpha = 1 is the invariant-gradient supremum; for a coordinate it is 1 at the origin.
  EXPECT_NEAR(estimate_seminorm(HoloFunction::coordinate(2, 1), Kind::S4, 1.0, SamplingPlan{}).value, 1.0, 1e-12);
}

TEST(ClosedForm, NormalQuantityOfLinearFunction) {
  // (1-|x|^2)|a| / (1 + |<x,a>|^2) along a/|a|: maximize (1-r^2) A / (1 + A^2 r^2).
  const Point a{cplx{2.0, 0}, cplx{0, 0}};
  const double A = 2.0;
  const double oracle = dense_max([&](double r) { return (1 - r * r) * A / (1 + A * A * r * r); });
  EXPECT_NEAR(estimate_seminorm(HoloFunction::linear(a), Kind::Normal, 1.0, SamplingPlan{}).value, oracle, 1e-6);
}

// One-dimensional oracles for ridge functions whose coefficients are
// non-negative: the slice maximum sits on the positive real axis.

TEST(DenseGridOracle, RidgePowersS1) {
  const Point u = Point::unit(3, 0);
  for (unsigned k : {1u, 2u, 3u, 5u}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      const double oracle = dense_max([&](double r) { return std::pow(1 - r, alpha) * k * std::pow(r, k - 1.0); });
      const auto e = estimate_seminorm(HoloFunction::ridge_power(u, k), Kind::S1, alpha, SamplingPlan{});
      EXPECT_NEAR(e.value, oracle, 1e-6) << "k=" << k << " alpha=" << alpha;
      EXPECT_LE(e.value, oracle + 1e-12);
    }
  }
}

TEST(DenseGridOracle, RidgePowerBetaS1AndGrowth) {
  const double beta = 0.5;
  const auto fam = generate_family(FamilySpec::ridge_power_beta(2, beta));
  const DiskSeries F{binomial_series(beta, 64)};
  const DiskSeries dF = F.derivative();
  const double hi = 1.0 - std::ldexp(1.0, -24);
  for (double alpha : {1.5, 2.0}) {
    const double s1 = dense_max([&](double r) { return std::pow(1 - r, alpha) * std::abs(dF(r)); }, hi);
    const double gr = dense_max([&](double r) { return std::pow(1 - r, alpha) * std::abs(F(r)); }, hi);
    EXPECT_NEAR(estimate_seminorm(fam[0], Kind::S1, alpha, SamplingPlan{}).value, s1, 1e-6 * (1 + s1));
    EXPECT_NEAR(estimate_seminorm(fam[0], Kind::Growth, alpha, SamplingPlan{}).value, gr, 1e-6 * (1 + gr));
  }
}

TEST(DenseGridOracle, RidgeLogS3MatchesDiskBloch) {
  const auto f = generate_family(FamilySpec::ridge_log(2))[0];
  const DiskSeries dF = f.slice_series(Point::unit(2, 0)).derivative();
  const double hi = 1.0 - std::ldexp(1.0, -24);
  const double oracle = dense_max([&](double r) { return (1 - r * r) * std::abs(dF(r)); }, hi);
  const auto e = estimate_seminorm(f, Kind::S3, 1.0, SamplingPlan{});
  EXPECT_NEAR(e.value, oracle, 1e-6);
  EXPECT_LE(e.value, oracle + 1e-12);
}

// ---------------------------------------------------------------------------
// Structural invariants

TEST(Invariants, S2NeverExceedsS1) {
  for (const auto& f : generate_family(FamilySpec::random_poly(3, 6, 20, 42))) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      const auto p = no_refine();
      EXPECT_LE(estimate_seminorm(f, Kind::S2, alpha, p).value, estimate_seminorm(f, Kind::S1, alpha, p).value + 1e-12);
    }
  }
}

TEST(Invariants, MonotoneInRadialLevels) {
  const auto fs = generate_family(FamilySpec::random_poly(3, 6, 5, 7));
  for (const auto& f : fs) {
    for (Kind k : {Kind::S1, Kind::S2, Kind::S4, Kind::Growth}) {
      double prev = 0.0;
      for (int J : {4, 8, 16, 24}) {
        auto p = no_refine();
        p.radial_levels = J;
        const double v = estimate_seminorm(f, k, 1.0, p).value;
        EXPECT_GE(v, prev) << to_string(k) << " J=" << J;
        prev = v;
      }
    }
  }
}

TEST(Invariants, ConventionsBracket) {
  // (1-r)^a <= (1-r^2)^a <= 2^a (1-r)^a pointwise, so on a common sample set.
  const auto p = no_refine();
  for (const auto& f : generate_family(FamilySpec::random_poly(3, 6, 5, 9))) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      const double lin = estimate_seminorm(f, Kind::S1, alpha, p, Convention::OneMinusNorm).value;
      const double sq = estimate_seminorm(f, Kind::S1, alpha, p, Convention::OneMinusNormSq).value;
      EXPECT_LE(lin, sq + 1e-12);
      EXPECT_LE(sq, std::pow(2.0, alpha) * lin + 1e-12);
    }
  }
}

TEST(Invariants, DeterministicForFixedPlan) {
  const auto f = generate_family(FamilySpec::random_poly(3, 6, 1, 5))[0];
  const auto a = estimate_seminorm(f, Kind::S3, 1.0, SamplingPlan{});
  const auto b = estimate_seminorm(f, Kind::S3, 1.0, SamplingPlan{});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness.x, b.witness.x);
  const auto q1 = lipschitz_quotient(f, 0.5, SamplingPlan{});
  const auto q2 = lipschitz_quotient(f, 0.5, SamplingPlan{});
  EXPECT_EQ(q1.value, q2.value);
}

TEST(Invariants, SlicedS2BoundedByS3AtSharedSamples) {
  // Radial derivative along a slice z -> f(zy) is z F'(z), so pointwise
  // (1-|z|^2)^a |z F'(z)| <= (1-|z|^2)^a |F'(z)|.
  const auto fs = generate_family(FamilySpec::random_poly(3, 6, 20, 42));
  const SamplingPlan plan;
  for (const auto& f : fs) {
    const double s3 = estimate_seminorm(f, Kind::S3, 1.0, plan).value;
    for (const auto& y : plan.directions(3)) {
      for (double r : plan.radii()) {
        const Point x = r * y;
        const double s2 = boundary_weight(r, 1.0, Convention::OneMinusNormSq) * std::abs(f.radial_derivative(x));
        EXPECT_LE(s2, s3 + 1e-12);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Argument validation

TEST(Validation, RejectsBadArguments) {
  const auto f = HoloFunction::coordinate(2, 0);
  EXPECT_THROW(estimate_seminorm(f, Kind::S1, -0.1, SamplingPlan{}), std::invalid_argument);
  EXPECT_THROW(estimate_seminorm(f, Kind::S3, 0.0, SamplingPlan{}), std::invalid_argument);
  EXPECT_THROW(estimate_seminorm(f, Kind::Lip, 1.0, SamplingPlan{}), std::invalid_argument);
  EXPECT_THROW(lipschitz_quotient(f, 1.5, SamplingPlan{}), std::invalid_argument);
  EXPECT_THROW(weighted_quotient(f, 1.0, 1.5, SamplingPlan{}), std::invalid_argument);
  EXPECT_THROW(disk_bloch_norm(DiskSeries::monomial(1), 0.0, SamplingPlan{}), std::invalid_argument);
}

TEST(Validation, S4InDimensionOneIsGuarded) {
  const auto f = HoloFunction::coordinate(1, 0);
  try {
    (void)estimate_seminorm(f, Kind::S4, 1.0, SamplingPlan{});
    FAIL() << "expected DimensionError";
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("dim >= 2"), std::string::npos);
  }
}

// ---------------------------------------------------------------------------
// Difference quotients

TEST(Quotients, LipschitzOfLinearRidge) {
  const auto f = HoloFunction::linear(Point::unit(3, 0));
  EXPECT_NEAR(lipschitz_quotient(f, 1.0, SamplingPlan{}).value, 1.0, 1e-9);
  // |2r|^(1/2) on antipodal axis pairs.
  EXPECT_NEAR(lipschitz_quotient(f, 0.5, SamplingPlan{}).value, std::sqrt(2.0), 1e-6);
}

TEST(Quotients, WeightedQuotientIsSymmetricInSplit) {
  const auto f = generate_family(FamilySpec::random_poly(3, 4, 1, 3))[0];
  SamplingPlan p;
  p.pair_samples = 300;
  const double a = weighted_quotient(f, 2.0, 0.5, p).value;
  const double b = weighted_quotient(f, 2.0, 1.5, p).value;
  EXPECT_EQ(a, b);
}

TEST(Quotients, PairSetContents) {
  SamplingPlan p;
  p.radial_levels = 4;
  p.directions_per_level = 2;
  p.pair_samples = 10;
  const auto pairs = quotient_pairs(2, p);
  for (const auto& [x, y] : pairs) {
    EXPECT_LT(norm(x), 1.0);
    EXPECT_LT(norm(y), 1.0);
  }
  // Collinear, near-diagonal and random parts all present.
  EXPECT_GT(pairs.size(), 4u * 15u + 10u);
}
