#include "cantordim/tree_set.hpp"

#include <algorithm>

#include "cantordim/errors.hpp"

namespace cantordim {

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::FullCube: return "full";
    case SetKind::CI: return "ci";
    case SetKind::Point: return "point";
    case SetKind::BlockConstraint: return "blocks";
    case SetKind::Sumset: return "sumset";
    case SetKind::Product: return "product";
    case SetKind::Union: return "union";
    case SetKind::Explicit: return "explicit";
    case SetKind::Shift: return "shift";
    case SetKind::Dilate: return "dilate";
  }
  return "unknown";
}

namespace {

std::pair<Rational, Rational> periodic_density(const PeriodicBits& p) {
  Rational d(static_cast<long>(p.ones_in_period()), static_cast<long>(p.period().size()));
  d.canonicalize();
  return {d, d};
}

BranchProfile periodic_profile(PeriodicBits bits, bool coordinate) {
  BranchProfile prof;
  prof.free = [bits](std::size_t i) { return bits.at(i) != 0; };
  prof.density = periodic_density(bits);
  prof.periodic = std::move(bits);
  prof.coordinate = coordinate;
  return prof;
}

bool never_free(const BranchProfile& p) {
  return p.periodic && p.periodic->ones_below(p.periodic->preperiod().size()) == 0 &&
         !p.periodic->has_infinitely_many_ones();
}

std::optional<BranchProfile> sum_profile(const std::optional<BranchProfile>& a,
                                         const std::optional<BranchProfile>& b) {
  // A node of A+B branches at i iff A or B does, provided the fixed bits of both are constants.
  if (!a || !b || !a->coordinate || !b->coordinate) return std::nullopt;
  if (never_free(*a)) return b;
  if (never_free(*b)) return a;
  if (a->periodic && b->periodic) {
    const auto& pa = *a->periodic;
    const auto& pb = *b->periodic;
    std::size_t pre = std::max(pa.preperiod().size(), pb.preperiod().size());
    std::size_t per = lcm_bounded(pa.period().size(), pb.period().size());
    return periodic_profile(
        PeriodicBits::tabulate(pre, per, [&](std::size_t i) { return pa.at(i) || pb.at(i); }),
        true);
  }
  BranchProfile prof;
  prof.free = [fa = a->free, fb = b->free](std::size_t i) { return fa(i) || fb(i); };
  prof.coordinate = true;
  return prof;
}

std::optional<BranchProfile> product_profile(const std::optional<BranchProfile>& a,
                                             const std::optional<BranchProfile>& b) {
  if (!a || !b) return std::nullopt;
  BranchProfile prof;
  prof.free = [fa = a->free, fb = b->free](std::size_t i) {
    return (i % 2 == 0) ? fa(i / 2) : fb(i / 2);
  };
  prof.coordinate = a->coordinate && b->coordinate;
  if (a->periodic && b->periodic) {
    const auto& pa = *a->periodic;
    const auto& pb = *b->periodic;
    std::size_t pre = std::max(pa.preperiod().size(), pb.preperiod().size());
    std::size_t per = lcm_bounded(pa.period().size(), pb.period().size());
    auto bits = PeriodicBits::tabulate(2 * pre, 2 * per, [&](std::size_t i) {
      return (i % 2 == 0) ? pa.at(i / 2) : pb.at(i / 2);
    });
    prof.density = periodic_density(bits);
    prof.periodic = std::move(bits);
  }
  return prof;
}

std::optional<BranchProfile> shift_profile(const std::optional<BranchProfile>& a, std::size_t k) {
  if (!a) return std::nullopt;
  BranchProfile prof;
  prof.free = [fa = a->free, k](std::size_t i) { return fa(i + k); };
  prof.coordinate = a->coordinate;
  prof.density = a->density;
  if (a->periodic) {
    const auto& pa = *a->periodic;
    std::size_t pre = pa.preperiod().size() > k ? pa.preperiod().size() - k : 0;
    prof.periodic = PeriodicBits::tabulate(pre, pa.period().size(),
                                           [&](std::size_t i) { return pa.at(i + k) != 0; });
  }
  return prof;
}

std::optional<BranchProfile> dilate_profile(const std::optional<BranchProfile>& a, std::size_t r) {
  if (!a) return std::nullopt;
  BranchProfile prof;
  prof.free = [fa = a->free, r](std::size_t i) { return i % r == 0 && fa(i / r); };
  prof.coordinate = false;
  if (a->density) {
    Rational rr(static_cast<long>(r));
    prof.density = std::make_pair(Rational(a->density->first / rr),
                                  Rational(a->density->second / rr));
  }
  if (a->periodic) {
    const auto& pa = *a->periodic;
    prof.periodic = PeriodicBits::tabulate(pa.preperiod().size() * r, pa.period().size() * r,
                                           [&](std::size_t i) { return i % r == 0 && pa.at(i / r); });
  }
  return prof;
}

}  // namespace

TreeSet::TreeSet(std::shared_ptr<const detail::SetNode> node, std::size_t stride,
                 std::optional<BranchProfile> profile)
    : node_(std::move(node)), stride_(stride), profile_(std::move(profile)) {}

SetKind TreeSet::kind() const { return static_cast<SetKind>(node_->index()); }

TreeSet TreeSet::full_cube() {
  return TreeSet(std::make_shared<detail::SetNode>(detail::FullCubeNode{}), 1,
                 periodic_profile(PeriodicBits(Word(), Word("1")), true));
}

TreeSet TreeSet::ci(IndexSpec I) {
  BranchProfile prof;
  prof.coordinate = true;
  prof.density = I.complement_density();
  prof.free = [I](std::size_t i) { return !I.contains(i); };
  if (const auto* p = I.as_periodic()) {
    auto comp = PeriodicBits::tabulate(p->preperiod().size(), p->period().size(),
                                       [&](std::size_t i) { return p->at(i) == 0; });
    prof.periodic = comp;
  }
  return TreeSet(std::make_shared<detail::SetNode>(detail::CINode{std::move(I)}), 1,
                 std::move(prof));
}

TreeSet TreeSet::point(PeriodicBits y) {
  return TreeSet(std::make_shared<detail::SetNode>(detail::PointNode{std::move(y)}), 1,
                 periodic_profile(PeriodicBits(Word(), Word("0")), true));
}

TreeSet TreeSet::block_constraint(std::vector<std::size_t> boundaries,
                                  std::vector<std::optional<std::vector<Word>>> blocks) {
  if (boundaries.empty() && blocks.empty()) return full_cube();
  if (boundaries.size() != blocks.size() + 1) {
    throw InputError("block constraint needs one pattern list per interval between boundaries");
  }
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    if (boundaries[i] >= boundaries[i + 1]) {
      throw InputError("block boundaries must be strictly increasing");
    }
    auto& pats = blocks[i];
    if (!pats) continue;
    if (pats->empty()) {
      throw InputError("block " + std::to_string(i) + " allows no pattern; the set would be empty");
    }
    std::size_t len = boundaries[i + 1] - boundaries[i];
    for (const auto& w : *pats) {
      if (w.size() != len) {
        throw InputError("pattern '" + w.str() + "' does not fit block " + std::to_string(i) +
                         " of length " + std::to_string(len));
      }
    }
    std::sort(pats->begin(), pats->end());
    pats->erase(std::unique(pats->begin(), pats->end()), pats->end());
  }
  return TreeSet(std::make_shared<detail::SetNode>(
                     detail::BlockNode{std::move(boundaries), std::move(blocks)}),
                 1, std::nullopt);
}

TreeSet TreeSet::sumset(const TreeSet& a, const TreeSet& b) {
  if (a.stride() != b.stride()) throw InputError("sumset of sets with different strides");
  return TreeSet(std::make_shared<detail::SetNode>(detail::SumNode{
                     std::make_shared<const TreeSet>(a), std::make_shared<const TreeSet>(b)}),
                 a.stride(), sum_profile(a.profile(), b.profile()));
}

TreeSet TreeSet::product(const TreeSet& a, const TreeSet& b) {
  if (a.stride() != 1 || b.stride() != 1) {
    throw InputError("product factors must be subsets of the Cantor cube itself (stride 1)");
  }
  return TreeSet(std::make_shared<detail::SetNode>(detail::ProductNode{
                     std::make_shared<const TreeSet>(a), std::make_shared<const TreeSet>(b)}),
                 2, product_profile(a.profile(), b.profile()));
}

TreeSet TreeSet::union_of(std::vector<TreeSet> parts) {
  if (parts.empty()) throw InputError("union of no sets");
  if (parts.size() == 1) return parts.front();
  std::size_t stride = parts.front().stride();
  for (const auto& p : parts) {
    if (p.stride() != stride) throw InputError("union of sets with different strides");
  }
  return TreeSet(std::make_shared<detail::SetNode>(detail::UnionNode{std::move(parts)}), stride,
                 std::nullopt);
}

TreeSet TreeSet::explicit_words(std::vector<Word> words, ExplicitTail tail) {
  if (words.empty()) throw InputError("explicit set needs at least one word");
  std::size_t len = words.front().size();
  for (const auto& w : words) {
    if (w.size() != len) throw InputError("explicit set words must have equal length");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return TreeSet(
      std::make_shared<detail::SetNode>(detail::ExplicitNode{std::move(words), len, tail}), 1,
      std::nullopt);
}

TreeSet TreeSet::shift(const TreeSet& a, std::size_t k) {
  if (a.stride() != 1) throw InputError("shift is defined for stride-1 sets only");
  if (k == 0) return a;
  return TreeSet(std::make_shared<detail::SetNode>(
                     detail::ShiftNode{std::make_shared<const TreeSet>(a), k}),
                 1, shift_profile(a.profile(), k));
}

TreeSet TreeSet::dilate(const TreeSet& a, std::size_t factor) {
  if (a.stride() != 1) throw InputError("dilation is defined for stride-1 sets only");
  if (factor == 0) throw InputError("dilation factor must be positive");
  if (factor == 1) return a;
  return TreeSet(std::make_shared<detail::SetNode>(
                     detail::DilateNode{std::make_shared<const TreeSet>(a), factor}),
                 1, dilate_profile(a.profile(), factor));
}

}  // namespace cantordim
