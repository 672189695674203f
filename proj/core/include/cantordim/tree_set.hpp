#pragma once

// Closed subsets of the Cantor cube coded by pruned binary trees.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cantordim/index_spec.hpp"
#include "cantordim/word.hpp"

namespace cantordim {

class TreeSet;

enum class SetKind {
  FullCube,
  CI,
  Point,
  BlockConstraint,
  Sumset,
  Product,
  Union,
  Explicit,
  Shift,
  Dilate,
};

std::string to_string(SetKind kind);

/// Below the listed words an explicit set continues either as the point p0000... or the cylinder.
enum class ExplicitTail { Point, Cylinder };

/// Sets in which every node at bit depth i has two children iff free(i) ("spherically symmetric"):
/// cosets of C_I, points, their sums, products and block-code images.
struct BranchProfile {
  std::function<bool(std::size_t)> free;
  std::optional<PeriodicBits> periodic;
  /// Lower and upper asymptotic density of free positions, when known exactly.
  std::optional<std::pair<Rational, Rational>> density;
  /// Non-free bits are the same constant on every node (cosets of coordinate subgroups).
  bool coordinate = false;
};

namespace detail {

struct FullCubeNode {};
struct CINode {
  IndexSpec I;
};
struct PointNode {
  PeriodicBits y;
};
struct BlockNode {
  std::vector<std::size_t> boundaries;
  /// nullopt marks an unconstrained block.
  std::vector<std::optional<std::vector<Word>>> blocks;
};
struct SumNode {
  std::shared_ptr<const TreeSet> a, b;
};
struct ProductNode {
  std::shared_ptr<const TreeSet> a, b;
};
struct UnionNode {
  std::vector<TreeSet> parts;
};
struct ExplicitNode {
  std::vector<Word> words;  ///< sorted, unique, equal length
  std::size_t length = 0;
  ExplicitTail tail = ExplicitTail::Point;
};
struct ShiftNode {
  std::shared_ptr<const TreeSet> a;
  std::size_t by = 0;
};
struct DilateNode {
  std::shared_ptr<const TreeSet> a;
  std::size_t factor = 1;
};

using SetNode = std::variant<FullCubeNode, CINode, PointNode, BlockNode, SumNode, ProductNode,
                             UnionNode, ExplicitNode, ShiftNode, DilateNode>;

}  // namespace detail

/// Immutable description of a nonempty closed set. Copies share structure.
///
/// Products interleave coordinates (first factor at even indices) and carry stride 2: one
/// level of the max metric on the product is two bits of the interleaved coding.
class TreeSet {
 public:
  static TreeSet full_cube();
  static TreeSet ci(IndexSpec I);
  static TreeSet point(PeriodicBits y);
  static TreeSet zero_point() { return point(PeriodicBits(Word(), Word("0"))); }
  static TreeSet block_constraint(std::vector<std::size_t> boundaries,
                                  std::vector<std::optional<std::vector<Word>>> blocks);
  static TreeSet sumset(const TreeSet& a, const TreeSet& b);
  static TreeSet product(const TreeSet& a, const TreeSet& b);
  static TreeSet union_of(std::vector<TreeSet> parts);
  static TreeSet explicit_words(std::vector<Word> words, ExplicitTail tail = ExplicitTail::Point);
  /// Image under the left shift dropping the first `k` coordinates.
  static TreeSet shift(const TreeSet& a, std::size_t k);
  /// Image under the block code repeating every bit `factor` times.
  static TreeSet dilate(const TreeSet& a, std::size_t factor);

  SetKind kind() const;
  std::size_t stride() const { return stride_; }
  const std::optional<BranchProfile>& profile() const { return profile_; }
  const detail::SetNode& node() const { return *node_; }

 private:
  TreeSet(std::shared_ptr<const detail::SetNode> node, std::size_t stride,
          std::optional<BranchProfile> profile);

  std::shared_ptr<const detail::SetNode> node_;
  std::size_t stride_ = 1;
  std::optional<BranchProfile> profile_;
};

}  // namespace cantordim
