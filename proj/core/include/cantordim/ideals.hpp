#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantordim/cover.hpp"
#include "cantordim/covers.hpp"
#include "cantordim/explorer.hpp"
#include "cantordim/hfun.hpp"
#include "cantordim/index_spec.hpp"
#include "cantordim/measures.hpp"
#include "cantordim/numeric.hpp"
#include "cantordim/tree_set.hpp"
#include "cantordim/word.hpp"

namespace cantordim {

/// Finite table of a strictly increasing f; block n is [f(n), f(n+1)).
class BlockPartition {
 public:
  BlockPartition() = default;
  /// Nondecreasing input; repeated values (plateaus) are collapsed.
  explicit BlockPartition(std::vector<std::size_t> values);

  const std::vector<std::size_t>& values() const { return f_; }
  std::size_t operator()(std::size_t n) const;
  std::size_t blocks() const { return f_.empty() ? 0 : f_.size() - 1; }
  std::size_t block_length(std::size_t n) const { return (*this)(n + 1) - (*this)(n); }
  /// The k with f(k) <= i < f(k+1), if the table reaches that far.
  std::optional<std::size_t> block_of(std::size_t i) const;
  /// x restricted to block n; throws InsufficientDepthError when x is too short.
  Word block(const Word& x, std::size_t n) const;
  /// f o g, for g strictly increasing with values inside the table.
  BlockPartition compose(const std::vector<std::size_t>& g) const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<std::size_t> f_;
};

/// Sequence of word sets F_n over the blocks of a partition, with |F_n| / 2^f(n+1) <= 2^-n.
class BlockFamily {
 public:
  BlockFamily() = default;
  /// Throws InputError on a word of the wrong length or a violated smallness bound.
  BlockFamily(BlockPartition partition, std::vector<std::vector<Word>> families);

  const BlockPartition& partition() const { return p_; }
  const std::vector<Word>& at(std::size_t n) const { return F_.at(n); }
  std::size_t size() const { return F_.size(); }
  /// The shifted family F^x: each F_k translated by x restricted to block k.
  BlockFamily translated(const Word& x) const;

 private:
  BlockPartition p_;
  std::vector<std::vector<Word>> F_;
};

/// Threshold report for a "for all but finitely many" predicate over a finite index window.
struct IndexVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  /// Least index from which the predicate holds up to the horizon.
  std::optional<std::size_t> n0;
  std::optional<std::size_t> failure_index;
  std::size_t horizon = 0;
  std::vector<std::size_t> indices;
  std::vector<bool> passed;
  std::string note;

  bool holds() const { return status == VerdictStatus::Holds; }
};

struct MembershipCount {
  std::size_t count = 0;
  std::vector<std::size_t> hits;
  Rational density;
};

/// Blocks n < N of x that fall into F_n.
MembershipCount s_membership_count(const BlockFamily& fam, const Word& x, std::size_t N);

/// How F_k must sit inside G_n. Projection: every z in F_k is the restriction of some word of
/// G_n. Extension: every word of block n of f o g whose k-th sub-block lies in F_k is in G_n.
/// Only Extension characterizes S(f,F) subset S(f o g, G).
enum class InclusionCriterion { Extension, Projection };

struct EincVerdict {
  IndexVerdict verdict;
  /// First failing pair (n, k).
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  InclusionCriterion criterion = InclusionCriterion::Extension;
};

/// Checks the block inclusion condition for n = 0..N.
EincVerdict einc_inclusion(const BlockPartition& f, const std::vector<std::size_t>& g,
                           const BlockFamily& F, const BlockFamily& G, std::size_t N,
                           InclusionCriterion criterion = InclusionCriterion::Extension);

/// Membership of x in A_{n,k}, decided by x restricted to block k of f.
bool ank_test(const Word& x, std::size_t n, std::size_t k, const std::vector<std::size_t>& g,
              const BlockFamily& F, const BlockFamily& G,
              InclusionCriterion criterion = InclusionCriterion::Extension);

/// Closed set {x : A_{n,k} holds for all n >= n0, k in [g(n), g(n+1))}, constrained on the
/// f-blocks ending at or before D.
TreeSet xtilde_treeset(const std::vector<std::size_t>& g, const BlockFamily& F,
                       const BlockFamily& G, std::size_t n0, std::size_t D,
                       InclusionCriterion criterion = InclusionCriterion::Extension);
/// The sets above for n0 = 0..n0_max (increasing).
Filtration xtilde_filtration(const std::vector<std::size_t>& g, const BlockFamily& F,
                             const BlockFamily& G, std::size_t n0_max, std::size_t D,
                             InclusionCriterion criterion = InclusionCriterion::Extension);

struct ShelahMWitness {
  BlockPartition f;
  std::vector<std::size_t> g;
  PeriodicBits y;
};

/// For n in [n_lo, n_hi]: is there k with g(n) <= f(k) < f(k+1) <= g(n+1) and x = y on block k.
IndexVerdict shelahM_check(const ShelahMWitness& w, const Word& x, std::size_t n_lo,
                           std::size_t n_hi);

/// f(0) = 0 and f(k+1) the least m > f(k) with 2^f(k) h(2^-m) <= 2^-k, for k < K.
BlockPartition me_fbuilder(const DyadicHFn& h, std::size_t K, std::size_t max_value = 1 << 20);

/// Groups G_n = union of B_k over g(n) <= f(k) < g(n+1), for blocks k < K.
Cover me_cover(const ShelahMWitness& w, std::size_t K, std::size_t budget = kDefaultBudget);

struct ShelahNWitness {
  BlockPartition f;
  std::vector<std::vector<Word>> H;
};

/// Throws InputError unless every H_n fits block n and |H_n| <= n.
void validate(const ShelahNWitness& w);

/// For k in [n_lo, n_hi]: x restricted to block k lies in H_k.
IndexVerdict shelahN_check(const ShelahNWitness& w, const Word& x, std::size_t n_lo,
                           std::size_t n_hi);

/// Filtration whose first set has index `first`; sets with an empty H_k ahead are skipped.
struct IndexedFiltration {
  std::size_t first = 0;
  Filtration sets;
};

/// X_n = {x : block k of x lies in H_k for every k >= n} on blocks ending at or before D.
IndexedFiltration shelahN_filtration(const ShelahNWitness& w, std::size_t D);

using Growth = std::function<Integer(std::size_t)>;

/// F(n) = floor(1 / h(2^(1-n))) with F(0) = 0, the largest growth allowed against h.
Growth nadd_growth_from(const DyadicHFn& h);
/// G(n) = floor(1 / h(2^-n)).
Growth tprime_growth_from(const DyadicHFn& h);

/// f(0) = 0 and f(n+1) the least m > f(n) with 2^f(n) (n+1)! <= F(m), for n < K.
BlockPartition nadd_fbuilder(const Growth& F, std::size_t K, std::size_t max_value = 4096);

struct BoxRow {
  std::size_t n = 0;
  std::size_t i = 0;
  Integer count;
  Integer bound;
  Rational value;
  bool passed = false;
};

struct BoxReport {
  std::vector<BoxRow> rows;
  /// Largest value over the rows (the upper box content bound); for the T' pipeline,
  /// the smallest value over the second half of each sampled sequence.
  Rational window_value;
  bool passed = false;
  std::string note;
};

/// Rows N_{X_n}(2^-i) against F(i), the product bound and N h(2^(1-i)) <= 1, for
/// f(n+1) <= i <= D.
BoxReport nadd_box_check(const ShelahNWitness& w, const Growth& F, const DyadicHFn& h,
                         std::size_t D, std::size_t budget = kDefaultBudget);

struct TPrimeWitness {
  BlockPartition f;
  std::vector<Integer> g;
  std::vector<std::size_t> I;
  std::map<std::size_t, std::vector<Word>> H;
};

/// Throws InputError unless I is increasing, each H_n fits block n and |H_n| <= g(n).
void validate(const TPrimeWitness& w);

/// For n in I within [n_lo, n_hi]: block n of x lies in H_n.
IndexVerdict tprime_check(const TPrimeWitness& w, const Word& x, std::size_t n_lo,
                          std::size_t n_hi);

/// f(0) = 0 and f(n+1) the least m > f(n) with 2^f(n) g(n) <= G(m), for n < K.
BlockPartition tprime_fbuilder(const Growth& G, const Growth& g, std::size_t K,
                               std::size_t max_value = 4096);

/// X_k = intersection of the F_n over n in I, n >= k; rows N_{X_k}(eps_n) h(eps_n) along
/// eps_n = 2^-f(n+1) with the liminf taken over the second half of the sampled n.
BoxReport tprime_lbox_check(const TPrimeWitness& w, const Growth& G, const DyadicHFn& h,
                            std::size_t D, std::size_t budget = kDefaultBudget);

/// H_n = {p restricted to block n : [p] in F_n} for a witness with eps_n = 2^-f(n+1).
TPrimeWitness tprime_from_dpnull_witness(const BlockPartition& f, const DnullWitness& w);

struct CIDensity {
  Rational lower;
  Rational upper;
  bool exact = false;
};

/// Lower and upper density of the complement of an infinite I.
CIDensity ci_density(const IndexSpec& I);

}  // namespace cantordim
