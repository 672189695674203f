#pragma once

// Exact cover verification against tree-coded sets and the cover constructions for strong
// measure zero type properties. Horizons are truncation parameters: J bounds the group or family
// index examined, D is the depth recorded with a verdict. Coverage of a set by finitely many
// cylinders is decided exactly.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantordim/cover.hpp"
#include "cantordim/hfun.hpp"
#include "cantordim/measures.hpp"
#include "cantordim/tree_set.hpp"

namespace cantordim {

/// Every word of trace_n(E) extends some element of length <= n.
bool is_cover_at_depth(const TreeSet& set, const std::vector<Word>& elems, std::size_t n,
                       std::size_t budget = kDefaultBudget);
/// E ⊆ ∪[w], decided at the depth of the longest element.
bool covers(const TreeSet& set, const std::vector<Word>& elems,
            std::size_t budget = kDefaultBudget);

struct CoverVerdict {
  VerdictStatus status = VerdictStatus::Fails;
  std::optional<std::size_t> j0;
  std::size_t horizon = 0;  ///< J
  std::size_t depth = 0;    ///< D
  std::optional<std::size_t> failure_index;
  std::string note;
  bool holds() const { return status == VerdictStatus::Holds; }
};

/// Every tail {U_n : n >= j}, j <= J, still covers E.
CoverVerdict verify_lambda(const TreeSet& set, const Cover& cover, std::size_t J, std::size_t D,
                           std::size_t budget = kDefaultBudget);

/// Least j0 such that each group j in [j0, J] covers E; failure_index is the last group that
/// does not.
CoverVerdict verify_gamma_groupable(const TreeSet& set, const Cover& cover, std::size_t J,
                                    std::size_t D, std::size_t budget = kDefaultBudget);

/// Orders a lambda-cover with sum of h(dG_n) < 1 by nonincreasing diameter; with
/// h = hfn_from_epsilons(eps) the result is eps-fine (element i against eps[i]).
Cover build_fine_lambda(const TreeSet& set, const std::vector<Rational>& eps,
                        const DyadicHFn& h, const Cover& witness, std::size_t J, std::size_t D,
                        std::size_t budget = kDefaultBudget);

/// Group n is a finite cover of X_n with h-cost below 2^-n, found by the measure DP at
/// increasing depth up to max_depth.
Cover build_gamma_groupable(const Filtration& f, const DyadicHFn& h, std::size_t groups,
                            std::size_t max_depth, const MeasureOptions& opts = {});
/// Same from supplied per-level covers, each checked for coverage and cost.
Cover build_gamma_groupable(const Filtration& f, const DyadicHFn& h,
                            const std::vector<std::vector<Word>>& level_covers,
                            std::size_t budget = kDefaultBudget);

/// eps-fine gamma-groupable cover with |G_j| <= j from a filtration with small g-contents at the
/// compressed scales delta_n = eps_{0+1+...+n}. Groups run to J.
Cover build_bounded_groups(const Filtration& f, const DyadicHFn& g, std::vector<Rational> eps,
                           std::size_t J, std::size_t budget = kDefaultBudget);

using SizeBound = std::function<Integer(std::size_t)>;

/// d(F_n) <= eps_n, |F_n| <= f(n) for n <= J, and the unions form a gamma-cover to J.
CoverVerdict verify_combPnull_witness(const TreeSet& set, const std::vector<Rational>& eps,
                                      const std::vector<std::vector<Word>>& families,
                                      const SizeBound& f, std::size_t J, std::size_t D,
                                      std::size_t budget = kDefaultBudget);

/// Families indexed by an infinite set I (finite sample).
struct DnullWitness {
  std::vector<Rational> eps;
  std::vector<std::size_t> I;
  std::map<std::size_t, std::vector<Word>> families;
};

CoverVerdict verify_combDnull_witness(const TreeSet& set, const DnullWitness& w,
                                      const SizeBound& f, std::size_t J, std::size_t D,
                                      std::size_t budget = kDefaultBudget);

/// Witness with |F_n| <= n on I from a filtration: n_k is the least index after n_{k-1} with
/// N_{X_k}(eps_n) <= n; the last set keeps supplying indices up to J.
DnullWitness build_combDnull_witness(const Filtration& f, const std::vector<Rational>& eps,
                                     std::size_t J, std::size_t budget = kDefaultBudget);

/// Diagonal merge: G_i is the union over k <= i of a family of witness k at an index m >= n_i
/// with at most n_i members, so |G_i| <= n_i^2 once n_i >= number of witnesses.
DnullWitness merge_diagonal(const std::vector<DnullWitness>& ws, std::size_t J);

struct GroupedSum {
  Rational total;
  std::vector<Rational> per_group;
};

GroupedSum gamma_grouped_sum(const Cover& cover, const DyadicHFn& h);

/// W = {V_j x U : U in U_j} on the interleaved product coding; requires |v_j| >= |u| for all
/// u in U_j. Group j of the result holds the products built from V_j.
Cover product_cover(const std::vector<Word>& v, const std::vector<std::vector<Word>>& u_families);

}  // namespace cantordim
