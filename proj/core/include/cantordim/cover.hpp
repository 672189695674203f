#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cantordim/word.hpp"

namespace cantordim {

/// Finite list of cylinders [U_n], optionally split into consecutive witnessing groups and
/// tagged with a fineness sequence. `stride` is the number of bits per metric level of the
/// ambient coding, so diam [w] = 2^-floor(|w| / stride).
struct Cover {
  std::vector<Word> elements;
  /// group[i] is the group of element i; groups are nondecreasing along the list.
  std::vector<std::size_t> group;
  std::optional<std::vector<Rational>> eps;
  std::size_t stride = 1;

  bool grouped() const { return !group.empty(); }
  std::size_t group_count() const { return group.empty() ? 0 : group.back() + 1; }
  std::size_t level(std::size_t i) const { return elements[i].size() / stride; }
  Rational diameter(std::size_t i) const { return pow2(-static_cast<long>(level(i))); }
  /// Indices of the elements of group j.
  std::vector<std::size_t> members(std::size_t j) const;
  /// Appends all elements as group j (which must not precede existing groups).
  void add_group(const std::vector<Word>& words, std::size_t j);
};

}  // namespace cantordim
