#include <gtest/gtest.h>

#include "battery.hpp"

using namespace cantordim;

TEST(Measures, FullCubeHasUnitMeasure) {
  auto h = DyadicHFn::power(1);
  for (std::size_t m = 0; m <= 4; ++m) {
    auto b = hausdorff_measure_delta(TreeSet::full_cube(), h, m, 12);
    EXPECT_EQ(b.lower, Rational(1));
    EXPECT_EQ(b.upper, Rational(1));
  }
}

TEST(Measures, BracketIsOrderedOnBattery) {
  for (auto& e : battery::sets()) {
    for (const Rational& s : {Rational(1), Rational(1, 2)}) {
      auto b = hausdorff_measure_delta(e.set, DyadicHFn::power(s), 2, 10);
      EXPECT_LE(b.lower, b.upper) << e.name;
      EXPECT_GE(b.lower, Rational(0));
    }
  }
}

TEST(Measures, UpperIsMonotoneInScale) {
  auto h = DyadicHFn::power(Rational(1, 2));
  TreeSet c = TreeSet::ci(IndexSpec::periodic("", "100"));
  Rational prev(0);
  for (std::size_t m = 0; m <= 10; ++m) {
    auto b = hausdorff_measure_delta(c, h, m, 14);
    EXPECT_GE(b.upper, prev);
    prev = b.upper;
  }
}

TEST(Measures, ExtractedCoverRealizesUpper) {
  auto h = DyadicHFn::power(1);
  TreeSet c = TreeSet::ci(IndexSpec::evens());
  auto b = hausdorff_measure_delta(c, h, 3, 10);
  Cover cov = extract_optimal_cover(c, h, 3, 10);
  EXPECT_EQ(cover_cost(cov, h), b.upper);
  EXPECT_TRUE(covers(c, cov.elements));
  for (std::size_t i = 0; i < cov.elements.size(); ++i) EXPECT_GE(cov.level(i), 3u);
}

TEST(Measures, PointsHaveZeroMeasure) {
  auto b = hausdorff_measure_delta(TreeSet::zero_point(), DyadicHFn::power(1), 0, 20);
  EXPECT_EQ(b.lower, Rational(0));
  EXPECT_LE(b.upper, pow2(-20));
}

TEST(Measures, MassCertificateFailsWhenTooHeavy) {
  auto cert = mass_lower_certificate(TreeSet::full_cube(), DyadicHFn::power(1), UniformSplit{Rational(2)}, 8);
  EXPECT_FALSE(cert.ok);
}

TEST(Measures, SparseBuilderRespectsBound) {
  auto h = DyadicHFn::power(Rational(1, 2));
  IndexSpec I = sparse_I_builder(h, 40);
  for (std::size_t n = 0; n <= 40; ++n) {
    // 2^|n ∩ I| 2^-n <= h(2^-n)
    Rational lhs = pow2(static_cast<long>(I.count_below(n)) - static_cast<long>(n));
    EXPECT_LE(lhs, h.at(n).hi) << n;
  }
}

TEST(Measures, BoxDimensionsOfFullAndPoint) {
  auto f = box_dimensions(TreeSet::full_cube(), 1, 32);
  EXPECT_DOUBLE_EQ(f.lower, 1.0);
  EXPECT_DOUBLE_EQ(f.upper, 1.0);
  auto p = box_dimensions(TreeSet::zero_point(), 1, 32);
  EXPECT_DOUBLE_EQ(p.upper, 0.0);
}

TEST(Measures, ContentSequenceOfCEvens) {
  auto seq = box_content_sequence(TreeSet::ci(IndexSpec::evens()), DyadicHFn::power(Rational(1, 2)), 0, 12);
  for (auto& e : seq.entries) {
    EXPECT_EQ(e.count, pow2_int(e.n / 2));
  }
}

TEST(Measures, ChainCheckOnCi) {
  auto rep = chain_check(TreeSet::ci(IndexSpec::evens()), DyadicHFn::power(Rational(1, 2)), 0, 12);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.hausdorff.lower, rep.upper_hausdorff.lower);
}

TEST(Measures, ProductInequalities) {
  TreeSet a = TreeSet::ci(IndexSpec::evens());
  TreeSet b = TreeSet::ci(IndexSpec::odds());
  auto rep = product_inequality_check(a, b, DyadicHFn::power(Rational(1, 2)), DyadicHFn::power(Rational(1, 2)), 0, 8);
  EXPECT_TRUE(rep.passed());
}

TEST(Measures, LipschitzImages) {
  TreeSet c = TreeSet::ci(IndexSpec::evens());
  auto h = DyadicHFn::power(Rational(1, 2));
  EXPECT_TRUE(lipschitz_image_check(c, BlockMap{BlockMap::Kind::Shift, 1}, h, 0, 10).passed);
  EXPECT_TRUE(lipschitz_image_check(c, BlockMap{BlockMap::Kind::Dilate, 2}, h, 0, 10).passed);
}

TEST(Measures, IncreasingSplitOfNullSet) {
  auto r = increasing_sets_split(TreeSet::ci(IndexSpec::evens()), DyadicHFn::power(1), Rational(1, 2), 16);
  ASSERT_TRUE(r.ok) << r.reason;
  for (auto& c : r.contents) EXPECT_LT(c.hi, Rational(1, 2));
}
