#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>

#include "cantordim/word.hpp"

namespace cantordim {

/// I = { i >= 1 : pattern[floor(log2 i) mod cycle] == 1 }, a union of dyadic blocks
/// [2^j, 2^(j+1)). With cycle 2 and pattern "10" this is the union of [4^k, 2*4^k).
struct LogBlocks {
  Word pattern;  ///< length = cycle
  friend bool operator==(const LogBlocks&, const LogBlocks&) = default;
};

/// Decidable index set I subset of N, either eventually periodic or log-block structured.
class IndexSpec {
 public:
  IndexSpec() = default;
  static IndexSpec periodic(PeriodicBits indicator) { return IndexSpec(std::move(indicator)); }
  static IndexSpec periodic(std::string_view preperiod, std::string_view period) {
    return IndexSpec(PeriodicBits(Word(preperiod), Word(period)));
  }
  static IndexSpec log_blocks(Word pattern);
  static IndexSpec evens() { return periodic("", "10"); }
  static IndexSpec odds() { return periodic("", "01"); }
  static IndexSpec all() { return periodic("", "1"); }
  static IndexSpec none() { return periodic("", "0"); }

  bool contains(std::size_t i) const;
  bool is_infinite() const;
  /// |I ∩ [0, n)|
  std::size_t count_below(std::size_t n) const;

  const PeriodicBits* as_periodic() const { return std::get_if<PeriodicBits>(&rep_); }
  const LogBlocks* as_log_blocks() const { return std::get_if<LogBlocks>(&rep_); }

  /// Exact lower and upper asymptotic densities of N \ I.
  std::pair<Rational, Rational> complement_density() const;

  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;

 private:
  explicit IndexSpec(PeriodicBits p) : rep_(std::move(p)) {}
  explicit IndexSpec(LogBlocks b) : rep_(std::move(b)) {}
  std::variant<PeriodicBits, LogBlocks> rep_{PeriodicBits(Word(), Word("0"))};
};

}  // namespace cantordim
