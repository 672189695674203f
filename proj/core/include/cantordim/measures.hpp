#pragma once

// Covering numbers, Hausdorff measure bounds by dynamic programming over cylinder covers, box
// contents, mass distribution certificates and instance checks of the classical inequalities.
//
// Scale arguments (m, D, n) are metric levels: level n means diameter 2^-n.
//
// Every set of diameter <= 2^-n meeting E lies in one cylinder of level n, and h is
// nondecreasing, so an optimal delta-cover can be taken to consist of cylinders. Below a node v
// of level >= m the optimal cost is min(h(diam(E ∩ [v])), sum over the children), which is the
// recursion evaluated here on the distinct states of each level.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cantordim/cover.hpp"
#include "cantordim/explorer.hpp"
#include "cantordim/hfun.hpp"
#include "cantordim/tree_set.hpp"

namespace cantordim {

struct MeasureOptions {
  std::size_t budget = kDefaultBudget;
  /// Extra levels searched for branching when a certificate needs a node's diameter.
  std::size_t lookahead = 64;
};

/// Certified bracket lower <= H^h_delta(E) <= upper for delta = 2^-scale_m, truncated at depth.
struct MeasureBound {
  Rational lower;
  Rational upper;
  std::size_t scale_m = 0;
  std::size_t depth = 0;
  std::string gauge;
};

MeasureBound hausdorff_measure_delta(const TreeSet& set, const DyadicHFn& h, std::size_t m,
                                     std::size_t depth, const MeasureOptions& opts = {});

/// Cylinders realizing the upper bound of hausdorff_measure_delta (parent preferred on ties).
Cover extract_optimal_cover(const TreeSet& set, const DyadicHFn& h, std::size_t m,
                            std::size_t depth, const MeasureOptions& opts = {});

/// Sum of h_hi(diam) over the elements of a cover.
Rational cover_cost(const Cover& cover, const DyadicHFn& h);

/// Lower bound for H^h(E ∩ [v]) over cylinders v at bit depth d, from the uniform mass on a
/// periodic branch profile; zero when no certificate applies.
Rational tail_mass_bound(const TreeSet& set, const DyadicHFn& h, std::size_t bit_depth);

// ---------------------------------------------------------------------------------------------

/// Mass split equally between the surviving children of every node.
struct UniformSplit {
  Rational total{1};
};
/// Explicit masses of cylinders; unlisted cylinders carry no mass.
struct MassTable {
  std::map<Word, Rational> mass;
};
using TreeMass = std::variant<UniformSplit, MassTable>;

struct MassCertificate {
  bool ok = false;
  Rational value;
  /// The inequality was shown at every depth, not only to `depth`.
  bool exact = false;
  std::size_t depth = 0;
  std::optional<Word> failure_node;
  std::string reason;
};

/// Checks lambda([p]) <= h(diam(E ∩ [p])) and additivity for every surviving p to level D.
MassCertificate mass_lower_certificate(const TreeSet& set, const DyadicHFn& h,
                                       const TreeMass& lambda, std::size_t depth,
                                       const MeasureOptions& opts = {});

/// Greedy I with 2^|n ∩ I| <= h(2^-n) / 2^-n for all n <= D. For h = r^s the admitted set is
/// periodic and the bound holds at every n; otherwise I is cut off after D.
IndexSpec sparse_I_builder(const DyadicHFn& h, std::size_t depth);

// ---------------------------------------------------------------------------------------------

struct ContentEntry {
  std::size_t n = 0;
  Integer count;
  Interval content;  ///< N_E(2^-n) h(2^-n)
};

struct ContentSequence {
  std::vector<ContentEntry> entries;
  std::size_t window_from = 0;  ///< tail window [window_from, last n]
  Interval tail_sup;
  Interval tail_inf;
};

ContentSequence box_content_sequence(const TreeSet& set, const DyadicHFn& h, std::size_t n_lo,
                                     std::size_t n_hi, std::size_t budget = kDefaultBudget);

struct DimensionEstimate {
  std::vector<std::pair<std::size_t, double>> ratios;  ///< (n, log2 N / n)
  double lower = 0;
  double upper = 0;
  std::size_t window_from = 0;
  /// Exact lower and upper box dimensions when the set's branch density is known.
  std::optional<std::pair<Rational, Rational>> closed_form;
};

DimensionEstimate box_dimensions(const TreeSet& set, std::size_t n_lo, std::size_t n_hi,
                                 std::size_t budget = kDefaultBudget);

using Filtration = std::vector<TreeSet>;

struct DboxWitness {
  Interval value;                  ///< sup_k of the tail infimum of N_{X_k} h
  std::vector<Interval> per_set;
  std::string label = "filtration-relative";
};

DboxWitness dbox_on_filtration(const Filtration& f, const DyadicHFn& h, std::size_t n_lo,
                               std::size_t n_hi, std::size_t budget = kDefaultBudget);

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ChainReport {
  MeasureBound hausdorff;
  MeasureBound upper_hausdorff;  ///< equal to hausdorff: tree sets are compact
  std::optional<Interval> dbox;
  Interval ubox;
  Rational min_content;  ///< min over m <= n <= D of N_E(2^-n) h_hi(2^-n)
  std::vector<CheckLine> checks;
  bool passed() const;
};

ChainReport chain_check(const TreeSet& set, const DyadicHFn& h, std::size_t m, std::size_t depth,
                        const std::optional<Filtration>& f = std::nullopt,
                        const MeasureOptions& opts = {});

struct ProductReport {
  std::vector<CheckLine> checks;
  std::optional<Rational> constant_v;   ///< empirical constant for the box-content inequality
  std::optional<Rational> constant_vi;  ///< empirical constant for the directed variant
  bool passed() const;
};

ProductReport product_inequality_check(const TreeSet& a, const TreeSet& b, const DyadicHFn& h,
                                       const DyadicHFn& g, std::size_t m, std::size_t depth,
                                       const MeasureOptions& opts = {});

struct BlockMap {
  enum class Kind { Identity, Shift, Dilate };
  Kind kind = Kind::Identity;
  std::size_t k = 0;  ///< shift amount or dilation factor
};

struct LipschitzReport {
  std::string map;
  MeasureBound image;
  Rational bound;  ///< right-hand side computed from the source
  std::string rule;
  bool passed = false;
};

/// Shift by k is 2^k-Lipschitz: H^s(image) <= 2^(ks) H^s(source). Dilation by r has modulus
/// g(t) = t^r: H^h(image) <= H^(h∘g)(source).
LipschitzReport lipschitz_image_check(const TreeSet& set, const BlockMap& map, const DyadicHFn& h,
                                      std::size_t m, std::size_t depth,
                                      const MeasureOptions& opts = {});

struct SplitResult {
  bool ok = false;
  Filtration sets;
  std::vector<Interval> contents;
  std::string reason;
};

/// A filtration whose members have content below s, witnessed on the window [D/2, D].
SplitResult increasing_sets_split(const TreeSet& set, const DyadicHFn& h, const Rational& s,
                                  std::size_t depth,
                                  const std::optional<Filtration>& candidates = std::nullopt,
                                  std::size_t budget = kDefaultBudget);

}  // namespace cantordim
