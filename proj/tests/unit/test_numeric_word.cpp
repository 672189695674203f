#include <gtest/gtest.h>

#include "cantordim/cantordim.hpp"

using namespace cantordim;

TEST(Numeric, Pow2AndLogs) {
  EXPECT_EQ(pow2(-3), Rational(1, 8));
  EXPECT_EQ(pow2(4), Rational(16));
  EXPECT_EQ(pow2_int(70), Integer(1) << 70);
  EXPECT_EQ(floor_log2(Rational(3, 8)), -2);
  EXPECT_EQ(ceil_log2(Rational(3, 8)), -1);
  EXPECT_EQ(floor_log2(Rational(8)), 3);
  EXPECT_EQ(ceil_log2(Rational(8)), 3);
  EXPECT_EQ(floor(Rational(-7, 2)), Integer(-4));
  EXPECT_EQ(ceil(Rational(-7, 2)), Integer(-3));
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(Numeric, RootIntervalBrackets) {
  Interval r = root_interval(Rational(2), 2);
  EXPECT_LE(r.lo * r.lo, Rational(2));
  EXPECT_GE(r.hi * r.hi, Rational(2));
  EXPECT_LT(r.width(), pow2(-100));
  Interval e = root_interval(Rational(9, 4), 2);
  EXPECT_TRUE(e.contains(Rational(3, 2)));
}

TEST(Word, BasicOperations) {
  Word w("0110");
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w.slice(1, 3).str(), "11");
  EXPECT_EQ(w.concat(Word("1")).str(), "01101");
  EXPECT_EQ(w.xor_with(Word("1010")).str(), "1100");
  EXPECT_TRUE(Word("01").is_prefix_of(w));
  EXPECT_FALSE(Word("1").is_prefix_of(w));
  EXPECT_EQ(first_difference(Word("0110"), Word("0100")), std::optional<std::size_t>(2));
  EXPECT_EQ(first_difference(w, w), std::nullopt);
  EXPECT_THROW(Word("012"), InputError);
}

TEST(PeriodicBits, PrefixAndCounts) {
  PeriodicBits y(Word("1"), Word("01"));
  EXPECT_EQ(y.prefix(6).str(), "101010");
  EXPECT_EQ(y.at(0), 1);
  EXPECT_EQ(y.at(1), 0);
  EXPECT_EQ(y.ones_below(5), 3u);
  EXPECT_TRUE(y.has_infinitely_many_ones());
  EXPECT_FALSE(PeriodicBits(Word("111"), Word("0")).has_infinitely_many_ones());
}

TEST(IndexSpec, LogBlocksMembership) {
  IndexSpec I = IndexSpec::log_blocks(Word("10"));
  std::vector<std::size_t> in;
  for (std::size_t i = 0; i < 20; ++i) {
    if (I.contains(i)) in.push_back(i);
  }
  EXPECT_EQ(in, (std::vector<std::size_t>{1, 4, 5, 6, 7, 16, 17, 18, 19}));
  EXPECT_TRUE(I.is_infinite());
  auto d = I.complement_density();
  EXPECT_EQ(d.first, Rational(1, 3));
  EXPECT_EQ(d.second, Rational(2, 3));
}

TEST(IndexSpec, PeriodicCounts) {
  IndexSpec e = IndexSpec::evens();
  EXPECT_EQ(e.count_below(5), 3u);
  EXPECT_FALSE(IndexSpec::periodic("1101", "0").is_infinite());
}
