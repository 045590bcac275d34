#include <gtest/gtest.h>

#include <cmath>

#include "bloch/families.hpp"
#include "bloch/harness.hpp"
#include "bloch/suites.hpp"

using namespace bloch;

namespace {

void expect_pass(const CheckResult& r) {
  EXPECT_TRUE(r.pass) << r.check_id;
  if (!r.pass) {
    for (const auto& o : r.observed) {
      if (!o.pass) ADD_FAILURE() << "  " << o.function_id << " " << o.kind << " " << o.ratio_name << " value=" << o.value
                                 << " ratio=" << o.ratio_value;
    }
  }
}

const FamilySpec kPoly = FamilySpec::random_poly(3, 6, 20, 42);

}  // namespace

TEST(CheckResult, RecordAggregatesPass) {
  CheckResult r;
  Observation ok;
  r.record(ok);
  EXPECT_TRUE(r.pass);
  Observation bad;
  bad.pass = false;
  r.record(bad);
  r.record(ok);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.observed.size(), 3u);
}

TEST(Windows, DeclaredValues) {
  EXPECT_EQ(windows::kRatioLo, 0.125);
  EXPECT_EQ(windows::kRatioHi, 8.0);
  EXPECT_EQ(windows::kEquivalenceMax, 32.0);
  EXPECT_EQ(windows::kRatioStability, 0.05);
  EXPECT_EQ(windows::kIntegralTol, 1e-12);
  EXPECT_EQ(windows::kDaiPairs, 10000u);
}

TEST(TAlpha, BlowupThresholdMatchesClosedForm) {
  // (1 - r^2)^(alpha - 1/2) at r = 1 - 2^-16 with alpha = 1/4.
  const double r = 1.0 - std::ldexp(1.0, -16);
  const double q = std::pow(1.0 - r * r, -0.25);
  EXPECT_NEAR(q, 13.45, 0.01);
  EXPECT_EQ(t_alpha_blowup_threshold(0.25), 13.0);
}

TEST(TAlpha, BoundedCaseTangentialValueIsOne) {
  const auto f = HoloFunction::coordinate(2, 1);
  for (double r : {0.0, 0.5, 0.9, 0.999}) {
    EXPECT_NEAR(s4_quantity(f, Point{cplx{r, 0}, cplx{0, 0}}, 0.5), 1.0, 1e-12);
  }
}

TEST(TAlpha, AllRegimesPass) {
  for (double alpha : {0.25, 0.5, 1.0}) expect_pass(check_t_alpha(alpha, SamplingPlan{}, kPoly));
}

TEST(Dai, RegionClassification) {
  EXPECT_EQ(classify_dai(2.0, 0.5), DaiRegion::BlochLambdaPlusOne);
  EXPECT_EQ(classify_dai(2.0, 1.5), DaiRegion::BlochAlphaMinusLambdaPlusOne);
  EXPECT_EQ(classify_dai(3.0, 1.5), DaiRegion::BlochLambdaPlusOne);
  EXPECT_EQ(classify_dai(3.0, 2.0), DaiRegion::BlochAlphaMinusLambdaPlusOne);
  EXPECT_EQ(classify_dai(1.5, 0.25), DaiRegion::BlochLambdaPlusOne);
  EXPECT_EQ(classify_dai(1.5, 1.25), DaiRegion::BlochAlphaMinusLambdaPlusOne);
  EXPECT_EQ(classify_dai(1.0, 0.0), DaiRegion::Bounded);
  EXPECT_EQ(classify_dai(2.0, 2.0), DaiRegion::Bounded);
  EXPECT_FALSE(classify_dai(1.5, 0.75).has_value());
  EXPECT_THROW(check_dai(kPoly, 1.5, 0.75, SamplingPlan{}), std::invalid_argument);
}

TEST(Dai, BoundedInequalityOnCube) {
  const auto f = HoloFunction::ridge_power(Point::unit(3, 0), 3);
  EXPECT_LE(bounded_difference_excess(f, SamplingPlan{}, 10000), 1e-12);
}

TEST(Dai, BoundedInequalityDetectsLargeFunctions) {
  // sup |3<x,u>| = 3 breaks the hypothesis; the sampled excess must notice.
  const auto f = 3.0 * HoloFunction::linear(Point::unit(3, 0));
  EXPECT_GT(bounded_difference_excess(f, SamplingPlan{}, 10000), 0.0);
}

TEST(Dai, DeclaredRegionsPass) {
  for (auto [a, l] : {std::pair{2.0, 0.5}, {2.0, 1.5}, {3.0, 1.5}, {1.5, 0.25}, {1.5, 1.25}}) {
    expect_pass(check_dai(FamilySpec::ridge_power(3, 3), a, l, SamplingPlan{}));
  }
  expect_pass(check_dai(FamilySpec::ridge_power(3, 3), 1.0, 0.0, SamplingPlan{}));
}

TEST(Identities, FamiliesPass) {
  for (const auto& fam : {kPoly, FamilySpec::ridge_log(2), FamilySpec::ridge_power_beta(2, 0.5)}) {
    expect_pass(check_pointwise_identities(fam, SamplingPlan{}));
  }
}

TEST(Integral, ExactOnRandomPolynomials) {
  const auto r = check_integral_family(kPoly, 10, SamplingPlan{});
  expect_pass(r);
  EXPECT_EQ(r.observed.size(), 20u);
  for (const auto& o : r.observed) EXPECT_LE(o.value, 1e-12);
}

TEST(Integral, NodeCountCoversDegree) {
  // m Gauss nodes integrate degree 2m - 1 exactly; the integrand has degree max_degree - 1.
  for (const auto& f : generate_family(kPoly)) EXPECT_GE(2 * integral_nodes(f) - 1, f.max_degree());
  EXPECT_THROW(check_integral_identity(HoloFunction::coordinate(2, 0), Point{cplx{0.5, 0}, cplx{0, 0}},
                                       Point::unit(2, 0), 0.5),
               DomainError);
}

TEST(Equivalence, RatiosBoundedAndOrdered) {
  EquivalenceSummary summary;
  const auto r = check_equivalence(kPoly, 1.0, SamplingPlan{}, &summary);
  expect_pass(r);
  EXPECT_GE(summary.max_s1_over_s2, 1.0);
  EXPECT_LE(summary.max_s1_over_s2, windows::kEquivalenceMax);
  EXPECT_NEAR(slice_proof_constant(1.0), 8.0 / 3.0, 1e-15);
}

TEST(Schlicht, BoundHoldsAndAxisAttains) {
  const Point u = Point::unit(3, 0);
  auto curves = random_curves(3, 10, 3, 0.99, 42);
  curves.push_back(axis_curve(u));
  const std::size_t axis = curves.size() - 1;
  expect_pass(check_schlicht_pick(HoloFunction::linear(u), 1.0, curves, SamplingPlan{}, "lin", axis));
  expect_pass(
      check_schlicht_pick(HoloFunction::ridge_power(u, 2), qf_ridge_square(), curves, SamplingPlan{}, "sq", axis));
}

TEST(Schlicht, UnderstatedBoundIsRejected) {
  const Point u = Point::unit(3, 0);
  const std::vector<Curve> curves{axis_curve(u)};
  EXPECT_FALSE(check_schlicht_pick(HoloFunction::linear(u), 0.5, curves, SamplingPlan{}, "lin").pass);
  // Overstating Q_f passes the bound but fails attainment on the axis curve.
  EXPECT_TRUE(check_schlicht_pick(HoloFunction::linear(u), 2.0, curves, SamplingPlan{}, "lin").pass);
  EXPECT_FALSE(check_schlicht_pick(HoloFunction::linear(u), 2.0, curves, SamplingPlan{}, "lin", 0).pass);
}

TEST(HardyLittlewood, WindowsHold) {
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    expect_pass(check_hardy_littlewood(FamilySpec::ridge_power(3, 3), alpha, SamplingPlan{}));
    expect_pass(check_hardy_littlewood(FamilySpec::ridge_power_beta(3, -alpha), alpha, SamplingPlan{}));
  }
}

TEST(Growth, WindowsHold) {
  for (double alpha : {1.5, 2.0}) {
    expect_pass(check_growth_equiv(FamilySpec::ridge_log(3), alpha, SamplingPlan{}));
    expect_pass(check_growth_equiv(FamilySpec::ridge_power_beta(3, alpha - 1.0), alpha, SamplingPlan{}));
  }
}

TEST(DerivativeGrowth, ProfilesOfCoordinate) {
  // f = x_1 with growth weight (1-|x|^2)^(1/2): all three profiles are finite and positive.
  const auto p = derivative_growth_profiles(HoloFunction::coordinate(2, 0), 0.5, SamplingPlan{});
  EXPECT_GT(p.tangential, 0.0);
  EXPECT_GT(p.radial, 0.0);
  EXPECT_TRUE(std::isfinite(p.radial_from_tan));
  expect_pass(check_derivative_growth(FamilySpec::coordinate(2), 0.5, SamplingPlan{}));
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_TRUE(is_suite_name("all"));
  EXPECT_TRUE(is_suite_name("t-alpha"));
  EXPECT_FALSE(is_suite_name("nope"));
  EXPECT_THROW(run_suite("nope", 42, SamplingPlan{}), std::invalid_argument);
}
