#include <gtest/gtest.h>

#include "cantordim/cantordim.hpp"

using namespace cantordim;

namespace {

std::vector<Word> words(std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (auto w : ws) out.emplace_back(w);
  return out;
}

Cover grouped(const std::vector<std::vector<Word>>& groups) {
  Cover c;
  for (std::size_t j = 0; j < groups.size(); ++j) c.add_group(groups[j], j);
  return c;
}

}  // namespace

TEST(Covers, CoverDecisions) {
  TreeSet c = TreeSet::ci(IndexSpec::evens());
  EXPECT_TRUE(covers(c, words({"0"})));
  EXPECT_FALSE(covers(c, words({"00"})));
  EXPECT_TRUE(covers(c, words({"00", "01"})));
  EXPECT_FALSE(covers(c, {}));
  EXPECT_TRUE(is_cover_at_depth(TreeSet::full_cube(), words({"0", "10", "11"}), 2));
  EXPECT_FALSE(is_cover_at_depth(TreeSet::full_cube(), words({"0", "10"}), 2));
}

TEST(Covers, LambdaTails) {
  TreeSet full = TreeSet::full_cube();
  Cover c;
  c.elements = words({"0", "1", "0", "1", "00"});
  auto v = verify_lambda(full, c, 2, 4);
  EXPECT_TRUE(v.holds());
  auto w = verify_lambda(full, c, 3, 4);
  EXPECT_FALSE(w.holds());
  EXPECT_EQ(w.failure_index, std::optional<std::size_t>(3));
}

TEST(Covers, GammaGroupableMissingGroup) {
  TreeSet full = TreeSet::full_cube();
  std::vector<std::vector<Word>> gs;
  for (std::size_t j = 0; j < 8; ++j) gs.push_back(j == 5 ? words({"0"}) : words({"0", "1"}));
  auto v = verify_gamma_groupable(full, grouped(gs), 7, 4);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.j0, std::optional<std::size_t>(6));
  EXPECT_EQ(v.failure_index, std::optional<std::size_t>(5));
  auto u = verify_gamma_groupable(full, grouped(gs), 5, 4);
  EXPECT_FALSE(u.holds());
  Cover flat;
  flat.elements = words({"0"});
  EXPECT_THROW(verify_gamma_groupable(full, flat, 1, 1), InputError);
}

TEST(Covers, CombPnullSizeViolation) {
  TreeSet c = TreeSet::zero_point();
  std::vector<Rational> eps;
  std::vector<std::vector<Word>> fams;
  for (std::size_t n = 0; n <= 5; ++n) {
    eps.push_back(pow2(-static_cast<long>(n)));
    std::vector<Word> fam;
    if (n > 0) fam.push_back(Word::zeros(n));
    if (n == 3) fam = words({"000", "001", "010", "011", "100"});
    fams.push_back(fam);
  }
  SizeBound f = [](std::size_t n) { return Integer(static_cast<unsigned long>(n)); };
  auto v = verify_combPnull_witness(c, eps, fams, f, 5, 5);
  EXPECT_FALSE(v.holds());
  EXPECT_EQ(v.failure_index, std::optional<std::size_t>(3));
}

TEST(Covers, ProductCover) {
  auto w = product_cover(words({"01", "1"}), {words({"0", "1"}), words({"1"})});
  EXPECT_EQ(w.stride, 2u);
  EXPECT_EQ(w.group_count(), 2u);
  EXPECT_EQ(w.elements[0].str(), "00");
  EXPECT_EQ(w.elements[1].str(), "01");
  EXPECT_EQ(w.elements[2].str(), "11");
  EXPECT_THROW(product_cover(words({"0"}), {words({"00"})}), InputError);
}

TEST(Covers, FineLambdaIsSortedAndFine) {
  TreeSet pt = TreeSet::zero_point();
  std::vector<Rational> eps;
  for (std::size_t n = 0; n < 12; ++n) eps.push_back(pow2(-static_cast<long>(n + 1)));
  auto h = hfn_from_epsilons(eps);
  Cover wit;
  for (std::size_t n = 0; n < 12; ++n) wit.elements.push_back(Word::zeros(4 * (12 - n)));
  Cover out = build_fine_lambda(pt, eps, h, wit, 6, 48);
  for (std::size_t i = 1; i < out.elements.size(); ++i) EXPECT_LE(out.level(i - 1), out.level(i));
  for (std::size_t i = 0; i < out.elements.size() && i < eps.size(); ++i) EXPECT_LE(out.diameter(i), eps[i]);
}

TEST(Covers, BuildGammaGroupableFromDp) {
  TreeSet c = TreeSet::ci(IndexSpec::evens());
  auto h = DyadicHFn::power(1);
  Cover cov = build_gamma_groupable(Filtration{c}, h, 4, 24);
  auto sums = gamma_grouped_sum(cov, h);
  for (std::size_t j = 0; j < sums.per_group.size(); ++j) EXPECT_LT(sums.per_group[j], pow2(-static_cast<long>(j)));
  EXPECT_TRUE(verify_gamma_groupable(c, cov, 3, 24).holds());
}

TEST(Covers, CombDnullBuildAndMerge) {
  std::vector<Rational> eps;
  for (std::size_t n = 0; n <= 12; ++n) eps.push_back(pow2(-static_cast<long>(n)));
  auto w0 = build_combDnull_witness(Filtration{TreeSet::zero_point()}, eps, 10);
  auto w1 = build_combDnull_witness(Filtration{TreeSet::point(PeriodicBits(Word(), Word("1")))}, eps, 10);
  SizeBound id = [](std::size_t n) { return Integer(static_cast<unsigned long>(n)); };
  EXPECT_TRUE(verify_combDnull_witness(TreeSet::zero_point(), w0, id, 10, 10).holds());
  auto m = merge_diagonal({w0, w1}, 10);
  SizeBound sq = [](std::size_t n) { return Integer(static_cast<unsigned long>(n * n)); };
  auto both = TreeSet::union_of({TreeSet::zero_point(), TreeSet::point(PeriodicBits(Word(), Word("1")))});
  EXPECT_TRUE(verify_combDnull_witness(both, m, sq, 10, 10).holds());
  auto other = w1;
  other.eps.back() = Rational(1, 3);
  EXPECT_THROW(merge_diagonal({w0, other}, 10), InputError);
}
