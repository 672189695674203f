#include "cantordim/covers.hpp"

#include <algorithm>
#include <array>

#include "cantordim/errors.hpp"
#include "cantordim/tree_ops.hpp"

namespace cantordim {

namespace {

class Trie {
 public:
  Trie() : next_(1, {-1, -1}), terminal_(1, false) {}
  void insert(const Word& w) {
    int node = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int b = w[i];
      if (next_[node][b] < 0) {
        next_[node][b] = static_cast<int>(next_.size());
        next_.push_back({-1, -1});
        terminal_.push_back(false);
      }
      node = next_[node][b];
    }
    terminal_[node] = true;
  }
  int child(int node, int bit) const { return next_[node][bit]; }
  bool terminal(int node) const { return terminal_[node]; }

 private:
  std::vector<std::array<int, 2>> next_;
  std::vector<bool> terminal_;
};

std::vector<Word> words_of(const Cover& c, const std::vector<std::size_t>& idx) {
  std::vector<Word> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(c.elements[i]);
  return out;
}

std::size_t level_of(const Rational& eps) {
  long l = -floor_log2(eps);
  return l < 0 ? 0 : static_cast<std::size_t>(l);
}

void check_fine(const std::vector<Word>& fam, std::size_t stride, const Rational& eps,
                bool& ok) {
  for (const auto& w : fam) {
    if (pow2(-static_cast<long>(w.size() / stride)) > eps) ok = false;
  }
}

CoverVerdict gamma_verdict(const std::vector<bool>& covered, std::size_t last_index,
                           std::size_t J, std::size_t D) {
  CoverVerdict v;
  v.horizon = J;
  v.depth = D;
  std::optional<std::size_t> last_fail;
  for (std::size_t j = 0; j < covered.size(); ++j) {
    if (!covered[j]) last_fail = j;
  }
  if (last_fail) v.failure_index = *last_fail;
  if (covered.empty() || !covered.back()) {
    v.status = VerdictStatus::Fails;
    v.note = "the family at index " + std::to_string(last_index) + " does not cover the set";
    return v;
  }
  v.status = VerdictStatus::Holds;
  v.j0 = last_fail ? *last_fail + 1 : 0;
  return v;
}

}  // namespace

bool is_cover_at_depth(const TreeSet& set, const std::vector<Word>& elems, std::size_t n,
                       std::size_t budget) {
  Trie trie;
  for (const auto& w : elems) {
    if (w.size() <= n) trie.insert(w);
  }
  if (trie.terminal(0)) return true;
  if (n == 0) return false;
  Explorer ex(set, budget);
  struct Item {
    StateId s;
    int node;
    std::size_t depth;
  };
  std::vector<Item> stack{{ex.root(), 0, 0}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    ex.charge();
    for (int b = 0; b < 2; ++b) {
      StateId c = ex.child(it.s, b);
      if (c == kNoState) continue;
      int t = trie.child(it.node, b);
      if (t < 0) return false;
      if (trie.terminal(t)) continue;
      if (it.depth + 1 == n) return false;
      stack.push_back({c, t, it.depth + 1});
    }
  }
  return true;
}

bool covers(const TreeSet& set, const std::vector<Word>& elems, std::size_t budget) {
  if (elems.empty()) return false;
  std::size_t n = 0;
  for (const auto& w : elems) n = std::max(n, w.size());
  return is_cover_at_depth(set, elems, n, budget);
}

CoverVerdict verify_lambda(const TreeSet& set, const Cover& cover, std::size_t J, std::size_t D,
                           std::size_t budget) {
  CoverVerdict v;
  v.horizon = J;
  v.depth = D;
  for (std::size_t j = 0; j <= J; ++j) {
    std::vector<Word> tail;
    if (j < cover.elements.size()) tail.assign(cover.elements.begin() + static_cast<long>(j),
                                               cover.elements.end());
    if (!covers(set, tail, budget)) {
      v.status = VerdictStatus::Fails;
      v.failure_index = j;
      v.note = "tail from index " + std::to_string(j) + " no longer covers the set";
      return v;
    }
  }
  v.status = VerdictStatus::Holds;
  v.note = "holds to (J, D) = (" + std::to_string(J) + ", " + std::to_string(D) + ")";
  return v;
}

CoverVerdict verify_gamma_groupable(const TreeSet& set, const Cover& cover, std::size_t J,
                                    std::size_t D, std::size_t budget) {
  if (!cover.grouped()) throw InputError("cover has no witnessing groups");
  std::vector<bool> ok(J + 1);
  for (std::size_t j = 0; j <= J; ++j) ok[j] = covers(set, words_of(cover, cover.members(j)), budget);
  return gamma_verdict(ok, J, J, D);
}

Cover build_fine_lambda(const TreeSet& set, const std::vector<Rational>& eps, const DyadicHFn& h,
                        const Cover& witness, std::size_t J, std::size_t D, std::size_t budget) {
  if (!verify_lambda(set, witness, J, D, budget).holds()) {
    throw InputError("witness is not a lambda-cover of the set to the requested horizon");
  }
  Rational sum = cover_cost(witness, h);
  if (sum >= 1) throw InputError("witness has h-sum " + to_string(sum) + " >= 1");
  Cover out;
  out.stride = witness.stride;
  std::vector<std::size_t> order(witness.elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return witness.level(a) < witness.level(b);
  });
  for (auto i : order) out.elements.push_back(witness.elements[i]);
  if (eps.size() < out.elements.size()) throw InputError("epsilon sequence shorter than the cover");
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    if (out.diameter(i) > eps[i]) {
      throw InputError("reordered cover is not fine at index " + std::to_string(i));
    }
  }
  out.eps = std::vector<Rational>(eps.begin(), eps.begin() + static_cast<long>(out.elements.size()));
  return out;
}

Cover build_gamma_groupable(const Filtration& f, const DyadicHFn& h, std::size_t groups,
                            std::size_t max_depth, const MeasureOptions& opts) {
  if (f.empty()) throw InputError("empty filtration");
  Cover out;
  out.stride = f.front().stride();
  out.group.clear();
  for (std::size_t n = 0; n < groups; ++n) {
    const TreeSet& x = f[std::min(n, f.size() - 1)];
    const Rational target = pow2(-static_cast<long>(n));
    auto cost = [&](std::size_t d) { return hausdorff_measure_delta(x, h, 0, d, opts).upper; };
    if (!(cost(max_depth) < target)) {
      throw InputError("no cover of set " + std::to_string(std::min(n, f.size() - 1)) +
                       " with cost below 2^-" + std::to_string(n) + " up to depth " +
                       std::to_string(max_depth));
    }
    std::size_t lo = 0, hi = max_depth;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cost(mid) < target) hi = mid;
      else lo = mid + 1;
    }
    out.add_group(extract_optimal_cover(x, h, 0, lo, opts).elements, n);
  }
  if (!(gamma_grouped_sum(out, h).total < 2)) throw Error("grouped cover sum is not below 2");
  return out;
}

Cover build_gamma_groupable(const Filtration& f, const DyadicHFn& h,
                            const std::vector<std::vector<Word>>& level_covers,
                            std::size_t budget) {
  if (f.empty()) throw InputError("empty filtration");
  Cover out;
  out.stride = f.front().stride();
  for (std::size_t n = 0; n < level_covers.size(); ++n) {
    const TreeSet& x = f[std::min(n, f.size() - 1)];
    if (!covers(x, level_covers[n], budget)) {
      throw InputError("level cover " + std::to_string(n) + " does not cover its set");
    }
    Cover tmp;
    tmp.stride = out.stride;
    tmp.elements = level_covers[n];
    Rational c = cover_cost(tmp, h);
    if (!(c < pow2(-static_cast<long>(n)))) {
      throw InputError("level cover " + std::to_string(n) + " costs " + to_string(c) +
                       ", not below 2^-" + std::to_string(n));
    }
    out.add_group(level_covers[n], n);
  }
  return out;
}

Cover build_bounded_groups(const Filtration& f, const DyadicHFn& g, std::vector<Rational> eps,
                           std::size_t J, std::size_t budget) {
  if (f.empty()) throw InputError("empty filtration");
  std::sort(eps.begin(), eps.end(), std::greater<>());
  const std::size_t need = J * (J + 1) / 2 + 1;
  if (eps.size() < need) {
    throw InputError("need " + std::to_string(need) + " epsilons for " + std::to_string(J) +
                     " groups");
  }
  const std::size_t stride = f.front().stride();
  // delta_n = eps_{n(n+1)/2}; level[n] is the cylinder level of diameter <= delta_n.
  std::vector<Rational> delta(J + 1);
  std::vector<std::size_t> level(J + 1);
  std::vector<Rational> g_up(J + 1);
  for (std::size_t n = 1; n <= J; ++n) {
    delta[n] = eps[n * (n + 1) / 2];
    level[n] = level_of(delta[n]);
    if (!(g.at(level[n]).lo > Rational(1, static_cast<unsigned long>(n)))) {
      throw InputError("g(delta_n) > 1/n fails at n=" + std::to_string(n));
    }
    bool dyadic = pow2(-static_cast<long>(level[n])) == delta[n];
    g_up[n] = g.at(dyadic || level[n] == 0 ? level[n] : level[n] - 1).hi;
  }
  std::vector<std::size_t> start(f.size());
  std::vector<std::vector<Integer>> counts(f.size());
  std::size_t prev = 1;
  for (std::size_t k = 0; k < f.size(); ++k) {
    counts[k] = trace_counts(f[k], level[J] * stride, budget);
    std::optional<std::size_t> nk;
    for (std::size_t n = J; n >= prev && n >= 1; --n) {
      if (!(Rational(counts[k][level[n] * stride]) * g_up[n] < 1)) break;
      nk = n;
    }
    if (!nk) {
      throw InputError("content witness N g < 1 not found for set " + std::to_string(k) +
                       " up to index " + std::to_string(J));
    }
    start[k] = *nk;
    prev = *nk;
  }
  Cover out;
  out.stride = stride;
  for (std::size_t j = 1; j <= J; ++j) {
    std::optional<std::size_t> k;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (start[i] <= j) k = i;
    }
    if (!k) continue;
    auto words = trace(f[*k], level[j] * stride, budget);
    if (words.size() > j) throw Error("group " + std::to_string(j) + " exceeds its size bound");
    out.add_group(words, j);
  }
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    if (out.diameter(i) > eps[i]) throw Error("bounded-group cover not fine at " + std::to_string(i));
  }
  out.eps = std::vector<Rational>(eps.begin(), eps.begin() + static_cast<long>(out.elements.size()));
  return out;
}

CoverVerdict verify_combPnull_witness(const TreeSet& set, const std::vector<Rational>& eps,
                                      const std::vector<std::vector<Word>>& families,
                                      const SizeBound& f, std::size_t J, std::size_t D,
                                      std::size_t budget) {
  std::vector<bool> ok(J + 1, false);
  for (std::size_t n = 0; n <= J; ++n) {
    if (n >= families.size()) continue;
    const auto& fam = families[n];
    if (n >= eps.size()) throw InputError("epsilon sequence shorter than the families");
    bool fine = true;
    check_fine(fam, set.stride(), eps[n], fine);
    bool small = Integer(static_cast<unsigned long>(fam.size())) <= f(n);
    if (!fine || !small) {
      CoverVerdict v;
      v.horizon = J;
      v.depth = D;
      v.failure_index = n;
      v.note = !small ? "family " + std::to_string(n) + " has " + std::to_string(fam.size()) +
                            " members, bound " + to_string(f(n))
                      : "family " + std::to_string(n) + " is not eps-fine";
      return v;
    }
    ok[n] = covers(set, fam, budget);
  }
  return gamma_verdict(ok, J, J, D);
}

CoverVerdict verify_combDnull_witness(const TreeSet& set, const DnullWitness& w,
                                      const SizeBound& f, std::size_t J, std::size_t D,
                                      std::size_t budget) {
  std::vector<bool> ok;
  std::vector<std::size_t> idx;
  for (std::size_t pos = 0; pos < w.I.size(); ++pos) {
    std::size_t n = w.I[pos];
    if (pos > 0 && n <= w.I[pos - 1]) throw InputError("index set I must be increasing");
    if (n > J) break;
    if (n >= w.eps.size()) throw InputError("epsilon sequence shorter than the index set");
    auto it = w.families.find(n);
    std::vector<Word> fam = it == w.families.end() ? std::vector<Word>{} : it->second;
    bool fine = true;
    check_fine(fam, set.stride(), w.eps[n], fine);
    bool small = Integer(static_cast<unsigned long>(fam.size())) <= f(n);
    if (!fine || !small) {
      CoverVerdict v;
      v.horizon = J;
      v.depth = D;
      v.failure_index = n;
      v.note = !small ? "family " + std::to_string(n) + " exceeds its size bound"
                      : "family " + std::to_string(n) + " is not eps-fine";
      return v;
    }
    ok.push_back(covers(set, fam, budget));
    idx.push_back(n);
  }
  if (idx.empty()) {
    CoverVerdict v;
    v.horizon = J;
    v.depth = D;
    v.note = "no index of I up to the horizon";
    return v;
  }
  CoverVerdict v = gamma_verdict(ok, idx.back(), J, D);
  if (v.failure_index) v.failure_index = idx[*v.failure_index];
  if (v.j0) v.j0 = *v.j0 < idx.size() ? idx[*v.j0] : idx.back();
  return v;
}

DnullWitness build_combDnull_witness(const Filtration& f, const std::vector<Rational>& eps,
                                     std::size_t J, std::size_t budget) {
  if (f.empty()) throw InputError("empty filtration");
  DnullWitness w;
  w.eps = eps;
  std::sort(w.eps.begin(), w.eps.end(), std::greater<>());
  const std::size_t stride = f.front().stride();
  const std::size_t top = std::min(J, w.eps.size() - 1);
  std::size_t n = 0;
  for (std::size_t k = 0;; ++k) {
    const TreeSet& x = f[std::min(k, f.size() - 1)];
    bool found = false;
    for (++n; n <= top; ++n) {
      std::size_t lvl = level_of(w.eps[n]);
      if (trace_count(x, lvl * stride, budget) <= Integer(static_cast<unsigned long>(n))) {
        w.I.push_back(n);
        w.families[n] = trace(x, lvl * stride, budget);
        found = true;
        break;
      }
    }
    if (!found) {
      if (k < f.size()) {
        throw InputError("no index up to " + std::to_string(J) + " with N(eps_n) <= n for set " +
                         std::to_string(k));
      }
      break;
    }
  }
  return w;
}

DnullWitness merge_diagonal(const std::vector<DnullWitness>& ws, std::size_t J) {
  if (ws.empty()) throw InputError("nothing to merge");
  for (const auto& w : ws) {
    if (w.eps != ws.front().eps) throw InputError("witnesses use different epsilon sequences");
  }
  const auto& eps = ws.front().eps;
  for (std::size_t i = 1; i < eps.size(); ++i) {
    if (eps[i] > eps[i - 1]) throw InputError("epsilon sequence must be nonincreasing");
  }
  const std::size_t K = ws.size();
  DnullWitness out;
  out.eps = eps;
  std::size_t i = 0;
  for (std::size_t n : ws.front().I) {
    if (n > J) break;
    if (n < std::max<std::size_t>(K, 1)) continue;
    std::vector<Word> group;
    bool ok = true;
    for (std::size_t k = 0; k <= std::min(i, K - 1) && ok; ++k) {
      std::optional<std::size_t> m;
      for (std::size_t cand : ws[k].I) {
        if (cand < n) continue;
        auto it = ws[k].families.find(cand);
        std::size_t size = it == ws[k].families.end() ? 0 : it->second.size();
        if (size <= n) {
          m = cand;
          break;
        }
      }
      if (!m) {
        ok = false;
        break;
      }
      auto it = ws[k].families.find(*m);
      if (it != ws[k].families.end()) group.insert(group.end(), it->second.begin(), it->second.end());
    }
    if (!ok) continue;
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    out.I.push_back(n);
    out.families[n] = std::move(group);
    ++i;
  }
  if (out.I.empty()) throw InputError("no diagonal index found up to " + std::to_string(J));
  return out;
}

GroupedSum gamma_grouped_sum(const Cover& cover, const DyadicHFn& h) {
  GroupedSum s;
  s.total = 0;
  if (cover.grouped()) s.per_group.assign(cover.group_count(), Rational(0));
  for (std::size_t i = 0; i < cover.elements.size(); ++i) {
    Rational c = h.at(cover.level(i)).hi;
    s.total += c;
    if (cover.grouped()) s.per_group[cover.group[i]] += c;
  }
  return s;
}

Cover product_cover(const std::vector<Word>& v, const std::vector<std::vector<Word>>& u_families) {
  if (v.size() != u_families.size()) {
    throw InputError("need one V_j for every family U_j");
  }
  Cover out;
  out.stride = 2;
  for (std::size_t j = 0; j < v.size(); ++j) {
    std::vector<Word> group;
    for (const auto& u : u_families[j]) {
      if (v[j].size() < u.size()) {
        throw InputError("fineness mismatch: V_" + std::to_string(j) + " is coarser than an element of U_" +
                         std::to_string(j));
      }
      Word w;
      for (std::size_t i = 0; i < u.size(); ++i) {
        w.push_back(v[j][i]);
        w.push_back(u[i]);
      }
      group.push_back(std::move(w));
    }
    out.add_group(group, j);
  }
  return out;
}

}  // namespace cantordim
