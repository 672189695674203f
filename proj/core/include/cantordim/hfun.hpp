#pragma once

// Hausdorff functions sampled on the dyadic grid: h_n = h(2^-n).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cantordim/numeric.hpp"
#include "cantordim/word.hpp"

namespace cantordim {

inline constexpr std::size_t kDefaultGridDepth = 256;

/// h(2^-n) = 2^(-n s) * n^t, logarithms to base 2 so that the grid values stay algebraic.
struct SymbolicGauge {
  Rational s;
  Rational t;
  bool pure_power() const { return sgn(t) == 0; }
  friend bool operator==(const SymbolicGauge&, const SymbolicGauge&) = default;
};

class DyadicHFn {
 public:
  /// r^s
  static DyadicHFn power(const Rational& s, std::size_t n_max = kDefaultGridDepth,
                         unsigned bits = kDefaultPrecisionBits);
  /// r^s (log2 1/r)^t. For t != 0 the value at n = 0 is clamped to the value at n = 1, and
  /// when t > 0 the first values are replaced by the running maximum so the table is monotone.
  static DyadicHFn power_log(const Rational& s, const Rational& t,
                             std::size_t n_max = kDefaultGridDepth,
                             unsigned bits = kDefaultPrecisionBits);
  static DyadicHFn from_symbolic(const SymbolicGauge& g, std::size_t n_max = kDefaultGridDepth,
                                 unsigned bits = kDefaultPrecisionBits);
  /// Values for n = 0..size-1; must be positive and nonincreasing.
  static DyadicHFn from_table(std::vector<Interval> values, unsigned bits = kDefaultPrecisionBits);
  static DyadicHFn from_exact(const std::vector<Rational>& values);

  /// h(2^-n). Symbolic gauges are evaluated past the stored table on demand.
  Interval at(std::size_t n) const;
  /// h at a local diameter; zero for sets that did not branch.
  Interval at(const LocalDiameter& d) const;

  std::size_t n_max() const { return values_.size() - 1; }
  bool defined_to(std::size_t n) const { return symbolic_.has_value() || n <= n_max(); }
  const std::optional<SymbolicGauge>& symbolic() const { return symbolic_; }
  unsigned precision_bits() const { return bits_; }
  const std::vector<Interval>& table() const { return values_; }

  /// h_n -> 0: exact for symbolic gauges, otherwise h_{N} < h_{N/2} on the stored table.
  bool vanishing() const;
  std::string describe() const;

 private:
  DyadicHFn() = default;
  Interval raw(std::size_t n) const;

  std::vector<Interval> values_;
  std::optional<SymbolicGauge> symbolic_;
  std::size_t monotone_from_ = 0;  ///< symbolic raw values are nonincreasing from here on
  unsigned bits_ = kDefaultPrecisionBits;
};

enum class VerdictStatus { Holds, Fails, Inconclusive };
std::string to_string(VerdictStatus v);

/// Three-valued answer to a limit question asked of finite tables.
struct LimitVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  bool exact = false;                ///< decided symbolically
  std::optional<std::size_t> index;  ///< failure index, if any
  std::optional<Rational> bound;     ///< e.g. the doubling constant
  std::size_t depth = 0;
  std::string note;
  bool holds() const { return status == VerdictStatus::Holds; }
};

/// g ≺ h, i.e. h(r)/g(r) -> 0, judged on the window [D/2, D].
LimitVerdict precede(const DyadicHFn& g, const DyadicHFn& h, std::size_t depth,
                     const Rational& tol);

/// A gauge h with h_i ≺ h for every input.
DyadicHFn diagonal_dominate(const std::vector<DyadicHFn>& hs);

/// (h∘g)(2^-n) = h(g(2^-n)), with g(2^-n) snapped outward to the grid.
DyadicHFn compose(const DyadicHFn& h, const DyadicHFn& g);
DyadicHFn multiply(const DyadicHFn& h, const DyadicHFn& g);
/// The inverse function g^-1 sampled on the grid; g must be strictly decreasing on the grid.
DyadicHFn grid_inverse(const DyadicHFn& g);

/// Doubling condition limsup h(2r)/h(r) < ∞.
LimitVerdict finite_order(const DyadicHFn& h, std::size_t depth);

/// A vanishing gauge with h(eps_n) >= 1/n for n = 1..N, where eps[i] holds eps_{i+1}.
DyadicHFn hfn_from_epsilons(const std::vector<Rational>& eps);

}  // namespace cantordim
