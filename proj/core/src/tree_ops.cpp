#include "cantordim/tree_ops.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "cantordim/errors.hpp"

namespace cantordim {

bool meets(const TreeSet& set, const Word& p, std::size_t budget) {
  Explorer ex(set, budget);
  return ex.walk(p) != kNoState;
}

std::vector<Word> trace(const TreeSet& set, std::size_t n, std::size_t budget) {
  Explorer ex(set, budget);
  std::vector<Word> out;
  struct Frame {
    StateId s;
    int next_bit;
  };
  std::vector<Frame> stack{{ex.root(), 0}};
  Word path;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (path.size() == n) {
      out.push_back(path);
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    if (f.next_bit == 2) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    int bit = f.next_bit++;
    StateId c = ex.child(f.s, bit);
    if (c == kNoState) continue;
    ex.charge();
    path.push_back(bit);
    stack.push_back({c, 0});
  }
  return out;
}

std::vector<Integer> trace_counts(const TreeSet& set, std::size_t n, std::size_t budget) {
  Explorer ex(set, budget);
  std::vector<Integer> counts{Integer(1)};
  std::map<StateId, Integer> level{{ex.root(), Integer(1)}};
  for (std::size_t d = 0; d < n; ++d) {
    std::map<StateId, Integer> next;
    Integer total(0);
    for (const auto& [s, mult] : level) {
      for (int bit = 0; bit < 2; ++bit) {
        StateId c = ex.child(s, bit);
        if (c == kNoState) continue;
        auto [it, fresh] = next.try_emplace(c, 0);
        if (fresh) ex.charge();
        it->second += mult;
        total += mult;
      }
    }
    counts.push_back(total);
    level = std::move(next);
  }
  return counts;
}

Integer trace_count(const TreeSet& set, std::size_t n, std::size_t budget) {
  return trace_counts(set, n, budget).back();
}

Integer covering_number(const TreeSet& set, std::size_t n, std::size_t budget) {
  return trace_count(set, n * set.stride(), budget);
}

LocalDiameter local_diameter(Explorer& ex, StateId s, std::size_t depth, std::size_t stride,
                             std::size_t max_level) {
  if (s == kNoState) throw InputError("local diameter of a cylinder that misses the set");
  const std::size_t max_bits = max_level * stride;
  while (depth < max_bits) {
    StateId c0 = ex.child(s, 0);
    StateId c1 = ex.child(s, 1);
    if (c0 != kNoState && c1 != kNoState) return LocalDiameter::dyadic(depth / stride);
    s = (c0 != kNoState) ? c0 : c1;
    ++depth;
  }
  return LocalDiameter::point_to_depth(std::max(max_level, depth / stride));
}

LocalDiameter local_diameter(const TreeSet& set, const Word& p, std::size_t max_level,
                             std::size_t budget) {
  Explorer ex(set, budget);
  StateId s = ex.walk(p);
  if (s == kNoState) throw InputError("cylinder [" + p.str() + "] misses the set");
  return local_diameter(ex, s, p.size(), set.stride(), max_level);
}

bool trace_included(const TreeSet& a, const TreeSet& b, std::size_t n, std::size_t budget) {
  Explorer ea(a, budget);
  Explorer eb(b, budget);
  using Pair = std::pair<StateId, StateId>;
  std::unordered_set<Pair, boost::hash<Pair>> level{{ea.root(), eb.root()}};
  for (std::size_t d = 0; d < n; ++d) {
    std::unordered_set<Pair, boost::hash<Pair>> next;
    for (auto [sa, sb] : level) {
      for (int bit = 0; bit < 2; ++bit) {
        StateId ca = ea.child(sa, bit);
        if (ca == kNoState) continue;
        StateId cb = eb.child(sb, bit);
        if (cb == kNoState) return false;
        if (next.emplace(ca, cb).second) ea.charge();
      }
    }
    level = std::move(next);
  }
  return true;
}

bool traces_equal(const TreeSet& a, const TreeSet& b, std::size_t n, std::size_t budget) {
  return trace_included(a, b, n, budget) && trace_included(b, a, n, budget);
}

}  // namespace cantordim
