#include <gtest/gtest.h>

#include "cantordim/cantordim.hpp"

using namespace cantordim;

TEST(HFun, PowerValuesExactForIntegerExponent) {
  auto h = DyadicHFn::power(1);
  EXPECT_EQ(h.at(0), Interval(Rational(1)));
  EXPECT_EQ(h.at(5), Interval(pow2(-5)));
  EXPECT_TRUE(h.vanishing());
}

TEST(HFun, HalfPowerBracketsIrrational) {
  auto h = DyadicHFn::power(Rational(1, 2));
  Interval v = h.at(1);
  EXPECT_LT(v.lo * v.lo, Rational(1, 2) + pow2(-100));
  EXPECT_GT(v.hi * v.hi, Rational(1, 2) - pow2(-100));
  EXPECT_LE(v.lo, v.hi);
  EXPECT_EQ(h.at(4), Interval(Rational(1, 4)));
}

TEST(HFun, PointDiameterIsZero) {
  auto h = DyadicHFn::power(1);
  EXPECT_EQ(h.at(LocalDiameter::point_to_depth(10)), Interval(Rational(0)));
}

TEST(HFun, TablesRejectBadShapes) {
  EXPECT_THROW(DyadicHFn::from_exact({}), InputError);
  EXPECT_THROW(DyadicHFn::from_exact({Rational(1, 2), Rational(1)}), InputError);
  auto t = DyadicHFn::from_exact({Rational(1), Rational(1, 2)});
  EXPECT_THROW(t.at(5), DepthExceededError);
}

TEST(HFun, PrecedeDecidesPowers) {
  auto g = DyadicHFn::power(1);
  auto h = DyadicHFn::power(Rational(1, 2));
  // r^1 / r^(1/2) -> 0
  EXPECT_TRUE(precede(h, g, 64, Rational(1, 1000)).holds());
  EXPECT_FALSE(precede(g, h, 64, Rational(1, 1000)).holds());
}

TEST(HFun, FiniteOrderOfPower) {
  auto v = finite_order(DyadicHFn::power(Rational(1, 2)), 32);
  EXPECT_TRUE(v.holds());
}

TEST(HFun, DiagonalDominates) {
  std::vector<DyadicHFn> hs{DyadicHFn::power(1), DyadicHFn::power(Rational(1, 2))};
  auto d = diagonal_dominate(hs);
  for (auto& h : hs) EXPECT_TRUE(precede(h, d, 40, Rational(1, 100)).holds());
}

TEST(HFun, ComposeAndMultiply) {
  auto h = DyadicHFn::power(1);
  auto sq = compose(h, DyadicHFn::power(2));
  EXPECT_EQ(sq.at(3), Interval(pow2(-6)));
  auto m = multiply(h, h);
  EXPECT_EQ(m.at(3), Interval(pow2(-6)));
}

TEST(HFun, FromEpsilons) {
  std::vector<Rational> eps{pow2(-1), pow2(-2), pow2(-3), pow2(-4)};
  auto h = hfn_from_epsilons(eps);
  for (std::size_t n = 1; n <= eps.size(); ++n) {
    long lvl = -floor_log2(eps[n - 1]);
    EXPECT_GE(h.at(static_cast<std::size_t>(lvl)).lo, Rational(1, static_cast<long>(n)));
  }
  EXPECT_TRUE(h.vanishing());
}
