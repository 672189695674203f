#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantordim/numeric.hpp"

namespace cantordim {

/// Finite binary word p; also names the cylinder [p] of all sequences extending p.
class Word {
 public:
  Word() = default;
  /// Accepts a string over {'0','1'}.
  explicit Word(std::string_view bits);

  static Word zeros(std::size_t n) { return Word(std::string(n, '0')); }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
  const std::string& str() const { return bits_; }

  void push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }
  void pop_back() { bits_.pop_back(); }
  Word extended(int bit) const;

  /// x restricted to [a, b).
  Word slice(std::size_t a, std::size_t b) const;
  Word prefix(std::size_t n) const { return slice(0, n); }
  Word concat(const Word& other) const;
  /// Coordinatewise sum mod 2; both words must have equal length.
  Word xor_with(const Word& other) const;
  bool is_prefix_of(const Word& other) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string bits_;
};

/// Index of the first disagreement, or nullopt when one word is a prefix of the other.
std::optional<std::size_t> first_difference(const Word& a, const Word& b);

/// Diameter of a set in the Cantor ultrametric d(x,y) = 2^-n(x,y): either 2^-exponent, or a set
/// that has not branched up to `exponent` (a point as far as the exploration could see).
struct LocalDiameter {
  enum class Kind { Dyadic, PointToDepth };
  Kind kind = Kind::Dyadic;
  std::size_t exponent = 0;

  static LocalDiameter dyadic(std::size_t e) { return {Kind::Dyadic, e}; }
  static LocalDiameter point_to_depth(std::size_t d) { return {Kind::PointToDepth, d}; }
  bool is_point() const { return kind == Kind::PointToDepth; }
  /// Exact value; zero for point-to-depth results.
  Rational value() const { return is_point() ? Rational(0) : pow2(-static_cast<long>(exponent)); }

  friend bool operator==(const LocalDiameter&, const LocalDiameter&) = default;
};

/// Eventually periodic bit sequence: preperiod followed by the period repeated forever.
class PeriodicBits {
 public:
  PeriodicBits() = default;
  /// The period must be nonempty.
  PeriodicBits(Word preperiod, Word period);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }
  int at(std::size_t i) const;
  Word prefix(std::size_t n) const;

  /// Count of ones in [0, n).
  std::size_t ones_below(std::size_t n) const;
  std::size_t ones_in_period() const;
  bool has_infinitely_many_ones() const { return ones_in_period() > 0; }

  /// Builds the canonical form of i -> bit(i) that is periodic with `period` after `pre`.
  template <class F>
  static PeriodicBits tabulate(std::size_t pre, std::size_t period, F&& bit) {
    std::string a, b;
    for (std::size_t i = 0; i < pre; ++i) a.push_back(bit(i) ? '1' : '0');
    for (std::size_t i = 0; i < period; ++i) b.push_back(bit(pre + i) ? '1' : '0');
    return PeriodicBits(Word(a), Word(b));
  }

  friend bool operator==(const PeriodicBits&, const PeriodicBits&) = default;

 private:
  Word pre_;
  Word per_{"0"};
};

std::size_t lcm_bounded(std::size_t a, std::size_t b);

}  // namespace cantordim
