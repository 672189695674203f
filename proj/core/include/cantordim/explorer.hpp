#pragma once

// Finite-state walks over the tree of a TreeSet.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "cantordim/tree_set.hpp"

namespace cantordim {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = 0xFFFFFFFFu;
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 22;

namespace detail {

/// Shared node counter; every interned state and every enumerated node is charged here.
class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  void charge(std::size_t n = 1);
  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

class Machine {
 public:
  virtual ~Machine() = default;
  virtual StateId root() = 0;
  /// State after appending `bit`, or kNoState when the longer cylinder misses the set.
  virtual StateId child(StateId s, int bit) = 0;
};

std::unique_ptr<Machine> make_machine(const TreeSet& set, Budget& budget);

}  // namespace detail

/// Walks the pruned tree of a set. States are canonical: two nodes with the same state have the
/// same subtree. Depth is not part of the state and must be tracked by the caller.
///
/// An Explorer memoizes as it goes and is not safe for concurrent use; create one per thread.
class Explorer {
 public:
  explicit Explorer(const TreeSet& set, std::size_t budget = kDefaultBudget);
  Explorer(const Explorer&) = delete;
  Explorer& operator=(const Explorer&) = delete;

  StateId root() const { return root_; }
  StateId child(StateId s, int bit) { return machine_->child(s, bit); }
  std::array<StateId, 2> children(StateId s) { return {child(s, 0), child(s, 1)}; }
  /// State at the end of p, or kNoState if [p] misses the set.
  StateId walk(const Word& p);

  /// Charges enumeration work against the node budget.
  void charge(std::size_t n = 1) { budget_.charge(n); }
  std::size_t budget_used() const { return budget_.used(); }
  std::size_t budget_limit() const { return budget_.limit(); }

 private:
  TreeSet set_;
  detail::Budget budget_;
  std::unique_ptr<detail::Machine> machine_;
  StateId root_;
};

}  // namespace cantordim
