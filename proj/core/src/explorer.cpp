#include "cantordim/explorer.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include <boost/container_hash/hash.hpp>

#include "cantordim/errors.hpp"

namespace cantordim {
namespace detail {

void Budget::charge(std::size_t n) {
  used_ += n;
  if (used_ > limit_) throw ResourceLimitError(limit_);
}

namespace {

constexpr StateId kUnknown = 0xFFFFFFFEu;

/// Machines whose states are interned keys, with memoized transitions.
template <class Key>
class Interned : public Machine {
 public:
  explicit Interned(Budget& budget) : budget_(budget) {}

  StateId child(StateId s, int bit) final {
    StateId m = memo_[s][bit];
    if (m == kUnknown) {
      Key k = keys_[s];
      m = compute(k, bit);
      memo_[s][bit] = m;
    }
    return m;
  }

 protected:
  StateId intern(Key k) {
    auto [it, fresh] = ids_.try_emplace(std::move(k), static_cast<StateId>(keys_.size()));
    if (fresh) {
      budget_.charge();
      keys_.push_back(it->first);
      memo_.push_back({kUnknown, kUnknown});
    }
    return it->second;
  }

  virtual StateId compute(const Key& k, int bit) = 0;

 private:
  Budget& budget_;
  std::unordered_map<Key, StateId, boost::hash<Key>> ids_;
  std::vector<Key> keys_;
  std::vector<std::array<StateId, 2>> memo_;
};

class FullMachine final : public Machine {
 public:
  StateId root() override { return 0; }
  StateId child(StateId, int) override { return 0; }
};

/// Position in an eventually periodic sequence, folded into [0, pre + period).
class PeriodicCursor {
 public:
  explicit PeriodicCursor(PeriodicBits bits) : bits_(std::move(bits)) {}
  StateId next(StateId pos) const {
    std::size_t n = static_cast<std::size_t>(pos) + 1;
    if (n >= bits_.preperiod().size() + bits_.period().size()) n = bits_.preperiod().size();
    return static_cast<StateId>(n);
  }
  int at(StateId pos) const { return bits_.at(pos); }

 private:
  PeriodicBits bits_;
};

class PeriodicCIMachine final : public Machine {
 public:
  explicit PeriodicCIMachine(const PeriodicBits& I) : cur_(I) {}
  StateId root() override { return 0; }
  StateId child(StateId s, int bit) override {
    if (bit && cur_.at(s)) return kNoState;
    return cur_.next(s);
  }

 private:
  PeriodicCursor cur_;
};

class LogCIMachine final : public Machine {
 public:
  explicit LogCIMachine(IndexSpec I) : I_(std::move(I)) {}
  StateId root() override { return 0; }
  StateId child(StateId s, int bit) override {
    if (s == kUnknown - 1) throw ResourceLimitError(kUnknown - 1);
    if (bit && I_.contains(s)) return kNoState;
    return s + 1;
  }

 private:
  IndexSpec I_;
};

class PointMachine final : public Machine {
 public:
  explicit PointMachine(const PeriodicBits& y) : cur_(y) {}
  StateId root() override { return 0; }
  StateId child(StateId s, int bit) override {
    return cur_.at(s) == bit ? cur_.next(s) : kNoState;
  }

 private:
  PeriodicCursor cur_;
};

using BlockKey = std::pair<std::size_t, std::string>;

class BlockMachine final : public Interned<BlockKey> {
 public:
  BlockMachine(const BlockNode& node, Budget& budget) : Interned(budget), node_(node) {
    root_ = intern(canonical(0, {}));
  }
  StateId root() override { return root_; }

 protected:
  StateId compute(const BlockKey& k, int bit) override {
    auto [depth, partial] = k;
    const auto& t = node_.boundaries;
    if (depth >= t.front() && depth < t.back()) {
      std::size_t i = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), depth) -
                                                t.begin()) - 1;
      if (const auto& pats = node_.blocks[i]) {
        partial.push_back(bit ? '1' : '0');
        auto it = std::lower_bound(pats->begin(), pats->end(), Word(partial));
        if (it == pats->end() || it->str().compare(0, partial.size(), partial) != 0) {
          return kNoState;
        }
        if (depth + 1 == t[i + 1]) partial.clear();
      }
    }
    return intern(canonical(depth + 1, std::move(partial)));
  }

 private:
  BlockKey canonical(std::size_t depth, std::string partial) const {
    if (depth >= node_.boundaries.back()) return {node_.boundaries.back(), {}};
    return {depth, std::move(partial)};
  }

  const BlockNode& node_;
  StateId root_;
};

class ExplicitMachine final : public Interned<std::string> {
 public:
  ExplicitMachine(const ExplicitNode& node, Budget& budget) : Interned(budget), node_(node) {
    root_ = intern(std::string());
  }
  StateId root() override { return root_; }

 protected:
  // Keys of length <= L are prefixes; the key "*" is the tail below a complete word.
  StateId compute(const std::string& k, int bit) override {
    if (k == "*" || k.size() == node_.length) {
      if (node_.tail == ExplicitTail::Point && bit) return kNoState;
      return intern("*");
    }
    std::string next = k + (bit ? '1' : '0');
    auto it = std::lower_bound(node_.words.begin(), node_.words.end(), Word(next));
    if (it == node_.words.end() || it->str().compare(0, next.size(), next) != 0) return kNoState;
    return intern(std::move(next));
  }

 private:
  const ExplicitNode& node_;
  StateId root_;
};

using PairSet = std::vector<std::pair<StateId, StateId>>;

class SumMachine final : public Interned<PairSet> {
 public:
  SumMachine(const SumNode& node, Budget& budget)
      : Interned(budget), a_(make_machine(*node.a, budget)), b_(make_machine(*node.b, budget)) {
    root_ = intern(PairSet{{a_->root(), b_->root()}});
  }
  StateId root() override { return root_; }

 protected:
  StateId compute(const PairSet& k, int bit) override {
    PairSet next;
    for (auto [a, b] : k) {
      for (int c = 0; c < 2; ++c) {
        StateId a2 = a_->child(a, c);
        if (a2 == kNoState) continue;
        StateId b2 = b_->child(b, c ^ bit);
        if (b2 == kNoState) continue;
        next.emplace_back(a2, b2);
      }
    }
    if (next.empty()) return kNoState;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return intern(std::move(next));
  }

 private:
  std::unique_ptr<Machine> a_, b_;
  StateId root_;
};

using Triple = std::array<StateId, 3>;

class ProductMachine final : public Interned<Triple> {
 public:
  ProductMachine(const ProductNode& node, Budget& budget)
      : Interned(budget), a_(make_machine(*node.a, budget)), b_(make_machine(*node.b, budget)) {
    root_ = intern(Triple{a_->root(), b_->root(), 0});
  }
  StateId root() override { return root_; }

 protected:
  StateId compute(const Triple& k, int bit) override {
    if (k[2] == 0) {
      StateId a2 = a_->child(k[0], bit);
      return a2 == kNoState ? kNoState : intern(Triple{a2, k[1], 1});
    }
    StateId b2 = b_->child(k[1], bit);
    return b2 == kNoState ? kNoState : intern(Triple{k[0], b2, 0});
  }

 private:
  std::unique_ptr<Machine> a_, b_;
  StateId root_;
};

class UnionMachine final : public Interned<PairSet> {
 public:
  UnionMachine(const UnionNode& node, Budget& budget) : Interned(budget) {
    PairSet start;
    for (const auto& part : node.parts) {
      start.emplace_back(static_cast<StateId>(parts_.size()), 0);
      parts_.push_back(make_machine(part, budget));
      start.back().second = parts_.back()->root();
    }
    root_ = intern(std::move(start));
  }
  StateId root() override { return root_; }

 protected:
  StateId compute(const PairSet& k, int bit) override {
    PairSet next;
    for (auto [i, s] : k) {
      StateId c = parts_[i]->child(s, bit);
      if (c != kNoState) next.emplace_back(i, c);
    }
    if (next.empty()) return kNoState;
    return intern(std::move(next));
  }

 private:
  std::vector<std::unique_ptr<Machine>> parts_;
  StateId root_;
};

using StateSet = std::vector<StateId>;

class ShiftMachine final : public Interned<StateSet> {
 public:
  ShiftMachine(const ShiftNode& node, Budget& budget)
      : Interned(budget), a_(make_machine(*node.a, budget)) {
    StateSet level{a_->root()};
    for (std::size_t d = 0; d < node.by; ++d) level = step(level, -1);
    root_ = intern(std::move(level));
  }
  StateId root() override { return root_; }

 protected:
  StateId compute(const StateSet& k, int bit) override {
    StateSet next = step(k, bit);
    if (next.empty()) return kNoState;
    return intern(std::move(next));
  }

 private:
  /// Children of every state along `bit`, or along both bits when bit < 0.
  StateSet step(const StateSet& level, int bit) {
    StateSet next;
    for (StateId s : level) {
      for (int c = 0; c < 2; ++c) {
        if (bit >= 0 && c != bit) continue;
        StateId t = a_->child(s, c);
        if (t != kNoState) next.push_back(t);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
  }

  std::unique_ptr<Machine> a_;
  StateId root_;
};

class DilateMachine final : public Interned<Triple> {
 public:
  DilateMachine(const DilateNode& node, Budget& budget)
      : Interned(budget), a_(make_machine(*node.a, budget)),
        factor_(static_cast<StateId>(node.factor)) {
    root_ = intern(Triple{a_->root(), 0, 0});
  }
  StateId root() override { return root_; }

 protected:
  // (source state, repeated bit, copies still owed)
  StateId compute(const Triple& k, int bit) override {
    if (k[2] == 0) {
      StateId a2 = a_->child(k[0], bit);
      if (a2 == kNoState) return kNoState;
      return intern(Triple{a2, static_cast<StateId>(bit), factor_ - 1});
    }
    if (static_cast<StateId>(bit) != k[1]) return kNoState;
    return intern(Triple{k[0], k[1], k[2] - 1});
  }

 private:
  std::unique_ptr<Machine> a_;
  StateId factor_;
  StateId root_;
};

}  // namespace

std::unique_ptr<Machine> make_machine(const TreeSet& set, Budget& budget) {
  const SetNode& n = set.node();
  return std::visit(
      [&](const auto& node) -> std::unique_ptr<Machine> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FullCubeNode>) {
          return std::make_unique<FullMachine>();
        } else if constexpr (std::is_same_v<T, CINode>) {
          if (const auto* p = node.I.as_periodic()) return std::make_unique<PeriodicCIMachine>(*p);
          return std::make_unique<LogCIMachine>(node.I);
        } else if constexpr (std::is_same_v<T, PointNode>) {
          return std::make_unique<PointMachine>(node.y);
        } else if constexpr (std::is_same_v<T, BlockNode>) {
          return std::make_unique<BlockMachine>(node, budget);
        } else if constexpr (std::is_same_v<T, SumNode>) {
          return std::make_unique<SumMachine>(node, budget);
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          return std::make_unique<ProductMachine>(node, budget);
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          return std::make_unique<UnionMachine>(node, budget);
        } else if constexpr (std::is_same_v<T, ExplicitNode>) {
          return std::make_unique<ExplicitMachine>(node, budget);
        } else if constexpr (std::is_same_v<T, ShiftNode>) {
          return std::make_unique<ShiftMachine>(node, budget);
        } else {
          return std::make_unique<DilateMachine>(node, budget);
        }
      },
      n);
}

}  // namespace detail

Explorer::Explorer(const TreeSet& set, std::size_t budget)
    : set_(set), budget_(budget), machine_(detail::make_machine(set_, budget_)), root_(machine_->root()) {}

StateId Explorer::walk(const Word& p) {
  StateId s = root_;
  for (std::size_t i = 0; i < p.size() && s != kNoState; ++i) s = child(s, p[i]);
  return s;
}

}  // namespace cantordim
