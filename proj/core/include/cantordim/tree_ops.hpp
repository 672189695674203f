#pragma once

// Queries on tree-coded sets. Depth arguments count bits of the coding unless stated otherwise;
// for products one metric level is two bits.

#include <cstddef>
#include <vector>

#include "cantordim/explorer.hpp"

namespace cantordim {

/// [p] ∩ E ≠ ∅
bool meets(const TreeSet& set, const Word& p, std::size_t budget = kDefaultBudget);

/// All words of length n meeting the set, in lexicographic order.
std::vector<Word> trace(const TreeSet& set, std::size_t n, std::size_t budget = kDefaultBudget);

/// |trace_n(E)| computed by propagating multiplicities over states, without enumeration.
Integer trace_count(const TreeSet& set, std::size_t n, std::size_t budget = kDefaultBudget);
/// |trace_i(E)| for i = 0..n.
std::vector<Integer> trace_counts(const TreeSet& set, std::size_t n,
                                  std::size_t budget = kDefaultBudget);

/// Covering number N_E(2^-n) at metric level n (n * stride bits).
Integer covering_number(const TreeSet& set, std::size_t n, std::size_t budget = kDefaultBudget);

/// Diameter of E ∩ [p] in metric levels: 2^-b where b is the first branching level at or below
/// p, or point-to-depth when no branching occurs before metric level `max_level`.
LocalDiameter local_diameter(const TreeSet& set, const Word& p, std::size_t max_level,
                             std::size_t budget = kDefaultBudget);
/// Same from an explorer state at bit depth `depth`.
LocalDiameter local_diameter(Explorer& ex, StateId s, std::size_t depth, std::size_t stride,
                             std::size_t max_level);

/// trace_n(A) ⊆ trace_n(B)
bool trace_included(const TreeSet& a, const TreeSet& b, std::size_t n,
                    std::size_t budget = kDefaultBudget);
bool traces_equal(const TreeSet& a, const TreeSet& b, std::size_t n,
                  std::size_t budget = kDefaultBudget);

}  // namespace cantordim
