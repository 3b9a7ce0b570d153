#include <gtest/gtest.h>

#include <cmath>

#include "fuzzyqp/fuzzy_number.hpp"
#include "test_support.hpp"

namespace fuzzyqp {
namespace {

constexpr double kTol = 1e-12;

TEST(AlphaCut, MidpointOfUnitTriangle) {
  EXPECT_EQ(alpha_cut({1, 2, 3}, 0.5), (Interval{1.5, 2.5}));
}

TEST(AlphaCut, TopLevelCollapsesToPeak) {
  EXPECT_EQ(alpha_cut({1, 2, 3}, 1.0), (Interval{2, 2}));
}

TEST(AlphaCut, BottomLevelIsSupport) {
  EXPECT_EQ(alpha_cut({-6, -5, -4}, 0.0), (Interval{-6, -4}));
}

TEST(AlphaCut, RejectsLevelsOutsideUnitInterval) {
  EXPECT_THROW(alpha_cut({1, 2, 3}, -0.1), DomainError);
  EXPECT_THROW(alpha_cut({1, 2, 3}, 1.5), DomainError);
  EXPECT_THROW(alpha_cut({1, 2, 3}, std::nan("")), DomainError);
}

TEST(Membership, PeakIsOne) { EXPECT_EQ(membership({1, 2, 3}, 2.0), 1.0); }
TEST(Membership, RisingBranchIsLinear) { EXPECT_DOUBLE_EQ(membership({1, 2, 3}, 1.5), 0.5); }
TEST(Membership, FallingBranchIsLinear) { EXPECT_DOUBLE_EQ(membership({1, 2, 4}, 3.0), 0.5); }
TEST(Membership, ZeroOutsideAndAtSupportEnds) {
  EXPECT_EQ(membership({1, 2, 3}, 4.0), 0.0);
  EXPECT_EQ(membership({1, 2, 3}, 1.0), 0.0);
  EXPECT_EQ(membership({1, 2, 3}, 3.0), 0.0);
  EXPECT_EQ(membership({1, 2, 3}, -10.0), 0.0);
}

TEST(Membership, CollapsedSidesAreIndicatorOfPeak) {
  EXPECT_EQ(membership({2, 2, 3}, 2.0), 1.0);
  EXPECT_EQ(membership({2, 2, 3}, 1.999), 0.0);
  EXPECT_DOUBLE_EQ(membership({2, 2, 3}, 2.5), 0.5);
  EXPECT_EQ(membership({1, 2, 2}, 2.0), 1.0);
  EXPECT_EQ(membership({1, 2, 2}, 2.001), 0.0);
  EXPECT_EQ(membership(Tfn::crisp(7), 7.0), 1.0);
  EXPECT_EQ(membership(Tfn::crisp(7), 7.5), 0.0);
}

TEST(IntervalArithmetic, Add) {
  EXPECT_EQ(add({1, 2}, {3, 4}), (Interval{4, 6}));
  EXPECT_EQ(add({0, 0}, {3, 4}), (Interval{3, 4}));
  EXPECT_EQ(add({-6, -4}, {1, 2}), (Interval{-5, -2}));
}

TEST(IntervalArithmetic, Scale) {
  EXPECT_EQ(scale(2, {1, 3}), (Interval{2, 6}));
  EXPECT_EQ(scale(-1, {1, 3}), (Interval{-3, -1}));
  EXPECT_EQ(scale(0, {1, 3}), (Interval{0, 0}));
}

TEST(IntervalArithmetic, Multiply) {
  EXPECT_EQ(mul({1, 2}, {3, 4}), (Interval{3, 8}));
  EXPECT_EQ(mul({-1, 2}, {3, 4}), (Interval{-4, 8}));
  EXPECT_EQ(mul({0, 0}, {-5, 7}), (Interval{0, 0}));
}

// Property suites, 1000 cases each.

TEST(FuzzyCoreProperties, NestedCuts) {
  testing::Rng rng(1);
  for (int k = 0; k < 1000; ++k) {
    const Tfn t = rng.tfn(-10, 10);
    double a1 = rng.uniform(0, 1), a2 = rng.uniform(0, 1);
    if (a1 > a2) std::swap(a1, a2);
    const Interval outer = alpha_cut(t, a1);
    const Interval inner = alpha_cut(t, a2);
    EXPECT_LE(outer.lo, inner.lo + kTol);
    EXPECT_GE(outer.hi, inner.hi - kTol);
    EXPECT_LE(inner.lo, inner.hi + kTol);
  }
}

TEST(FuzzyCoreProperties, EndpointConsistency) {
  testing::Rng rng(2);
  for (int k = 0; k < 1000; ++k) {
    const Tfn t = rng.tfn(-10, 10);
    EXPECT_EQ(alpha_cut(t, 0.0), (Interval{t.a1, t.a3}));
    EXPECT_EQ(alpha_cut(t, 1.0), (Interval{t.a2, t.a2}));
  }
}

TEST(FuzzyCoreProperties, MembershipCutDuality) {
  testing::Rng rng(3);
  for (int k = 0; k < 1000; ++k) {
    const Tfn t = rng.tfn(-10, 10);
    // alpha = 0 is excluded: the support ends have degree 0.
    const double alpha = rng.uniform(1e-6, 1);
    const Interval cut = alpha_cut(t, alpha);
    for (int g = 0; g <= 10; ++g) {
      const double x = cut.lo + (cut.hi - cut.lo) * g / 10.0;
      EXPECT_GE(membership(t, x), alpha - 1e-9) << t << " alpha=" << alpha << " x=" << x;
    }
  }
}

TEST(FuzzyCoreProperties, ArithmeticContainsPointwiseResults) {
  testing::Rng rng(4);
  for (int k = 0; k < 1000; ++k) {
    double a0 = rng.uniform(-5, 5), a1 = rng.uniform(-5, 5);
    double b0 = rng.uniform(-5, 5), b1 = rng.uniform(-5, 5);
    const Interval a{std::min(a0, a1), std::max(a0, a1)};
    const Interval b{std::min(b0, b1), std::max(b0, b1)};
    const double kk = rng.uniform(-3, 3);
    const double u = rng.uniform(a.lo, a.hi);
    const double v = rng.uniform(b.lo, b.hi);
    const Interval s = add(a, b), p = mul(a, b), sc = scale(kk, a);
    EXPECT_TRUE(s.lo - kTol <= u + v && u + v <= s.hi + kTol);
    EXPECT_TRUE(p.lo - kTol <= u * v && u * v <= p.hi + kTol);
    EXPECT_TRUE(sc.lo - kTol <= kk * u && kk * u <= sc.hi + kTol);
  }
}

TEST(FuzzyCoreProperties, CrispNumbersFollowRealArithmetic) {
  testing::Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const double x = rng.uniform(-100, 100), y = rng.uniform(-100, 100), s = rng.uniform(-4, 4);
    const double alpha = rng.uniform(0, 1);
    const Interval cx = alpha_cut(Tfn::crisp(x), alpha), cy = alpha_cut(Tfn::crisp(y), alpha);
    EXPECT_EQ(cx, (Interval{x, x}));
    EXPECT_EQ(add(cx, cy), (Interval{x + y, x + y}));
    EXPECT_EQ(mul(cx, cy), (Interval{x * y, x * y}));
    EXPECT_EQ(scale(s, cx), (Interval{s * x, s * x}));
    EXPECT_EQ(membership(Tfn::crisp(x), x), 1.0);
  }
}

}  // namespace
}  // namespace fuzzyqp
