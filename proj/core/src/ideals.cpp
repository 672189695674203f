#include "cantordim/ideals.hpp"

#include <algorithm>

#include "cantordim/errors.hpp"
#include "cantordim/tree_ops.hpp"

namespace cantordim {

namespace {

IndexVerdict make_verdict(std::vector<std::size_t> indices, std::vector<bool> passed,
                          std::size_t horizon) {
  IndexVerdict v;
  v.horizon = horizon;
  std::optional<std::size_t> last_fail;
  for (std::size_t i = 0; i < passed.size(); ++i) {
    if (!passed[i]) last_fail = i;
  }
  if (passed.empty()) {
    v.note = "no index in the window";
  } else if (passed.back()) {
    v.status = VerdictStatus::Holds;
    v.n0 = last_fail ? indices[*last_fail + 1] : indices.front();
  } else {
    v.status = VerdictStatus::Fails;
    v.note = "fails at the horizon index " + std::to_string(indices.back());
  }
  if (last_fail) v.failure_index = indices[*last_fail];
  v.indices = std::move(indices);
  v.passed = std::move(passed);
  return v;
}

Word bits_of(unsigned long long p, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<int>((p >> (len - 1 - i)) & 1));
  return w;
}

Integer factorial(std::size_t n) {
  Integer r(1);
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

// Multiplicity of each sub-block of G_n at [off, off + len), with the number of completions
// 2^(L - len) that the Extension criterion requires.
struct SliceIndex {
  std::map<Word, Integer> counts;
  Integer full;

  SliceIndex(const std::vector<Word>& Gn, std::size_t L, std::size_t off, std::size_t len)
      : full(pow2_int(static_cast<unsigned long>(L - len))) {
    for (const auto& t : Gn) counts[t.slice(off, off + len)] += 1;
  }
  bool accepts(const Word& u, InclusionCriterion c) const {
    auto it = counts.find(u);
    if (it == counts.end()) return false;
    return c == InclusionCriterion::Projection || it->second == full;
  }
};

struct BlockPlace {
  std::size_t n, off, len, L;
};

// Position of f-block k inside block n of f o g.
BlockPlace place(std::size_t n, std::size_t k, const std::vector<std::size_t>& g,
                 const BlockFamily& F, const BlockFamily& G) {
  const auto& f = F.partition();
  if (n + 1 >= g.size() || k < g[n] || k >= g[n + 1]) {
    throw InputError("block " + std::to_string(k) + " is not inside [g(n), g(n+1)) for n=" +
                     std::to_string(n));
  }
  if (n >= G.size()) throw InputError("G has no family at index " + std::to_string(n));
  if (k >= F.size()) throw InputError("F has no family at index " + std::to_string(k));
  if (G.partition()(n) != f(g[n]) || G.partition()(n + 1) != f(g[n + 1])) {
    throw InputError("G is not a family over the blocks of f o g");
  }
  return {n, f(k) - f(g[n]), f.block_length(k), G.partition().block_length(n)};
}

std::vector<Word> allowed_words(const BlockPlace& pl, const std::vector<Word>& Fk,
                                const std::vector<Word>& Gn, InclusionCriterion c) {
  SliceIndex idx(Gn, pl.L, pl.off, pl.len);
  std::vector<Word> out;
  for (const auto& [u, cnt] : idx.counts) {
    if (!idx.accepts(u, c)) continue;
    Word y = u.xor_with(Fk.front());
    bool ok = true;
    for (std::size_t i = 1; i < Fk.size() && ok; ++i) ok = idx.accepts(Fk[i].xor_with(y), c);
    if (ok) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t constrained_blocks(const BlockPartition& f, std::size_t available, std::size_t D) {
  std::size_t K = 0;
  while (K < available && K < f.blocks() && f(K + 1) <= D) ++K;
  return K;
}

TreeSet blocks_set(const BlockPartition& f, std::size_t K,
                   std::vector<std::optional<std::vector<Word>>> blocks) {
  bool any = std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.has_value(); });
  if (K == 0 || !any) return TreeSet::full_cube();
  std::vector<std::size_t> bounds(f.values().begin(), f.values().begin() + static_cast<long>(K + 1));
  return TreeSet::block_constraint(std::move(bounds), std::move(blocks));
}

template <class Pred>
std::size_t least_value(std::size_t lo, std::size_t max_value, Pred&& ok) {
  // Smallest m in [lo, max_value] with ok(m), for ok monotone in m.
  std::size_t step = 1, hi = lo;
  while (!ok(hi)) {
    if (hi >= max_value) return max_value + 1;
    lo = hi + 1;
    hi = std::min(max_value, hi + step);
    step *= 2;
  }
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

}  // namespace

BlockPartition::BlockPartition(std::vector<std::size_t> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) throw InputError("block partition must be nondecreasing");
  }
  values.erase(std::unique(values.begin(), values.end()), values.end());
  f_ = std::move(values);
}

std::size_t BlockPartition::operator()(std::size_t n) const {
  if (n >= f_.size()) throw DepthExceededError(n, blocks());
  return f_[n];
}

std::optional<std::size_t> BlockPartition::block_of(std::size_t i) const {
  if (f_.empty() || i < f_.front() || i >= f_.back()) return std::nullopt;
  auto it = std::upper_bound(f_.begin(), f_.end(), i);
  return static_cast<std::size_t>(it - f_.begin()) - 1;
}

Word BlockPartition::block(const Word& x, std::size_t n) const {
  std::size_t end = (*this)(n + 1);
  if (x.size() < end) throw InsufficientDepthError(end, x.size());
  return x.slice((*this)(n), end);
}

BlockPartition BlockPartition::compose(const std::vector<std::size_t>& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0 && g[i] <= g[i - 1]) throw InputError("g must be strictly increasing");
    out.push_back((*this)(g[i]));
  }
  return BlockPartition(std::move(out));
}

BlockFamily::BlockFamily(BlockPartition partition, std::vector<std::vector<Word>> families)
    : p_(std::move(partition)), F_(std::move(families)) {
  if (F_.size() > p_.blocks()) throw InputError("more families than blocks in the partition");
  for (std::size_t n = 0; n < F_.size(); ++n) {
    auto& fam = F_[n];
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    for (const auto& w : fam) {
      if (w.size() != p_.block_length(n)) {
        throw InputError("word '" + w.str() + "' does not fit block " + std::to_string(n));
      }
    }
    Integer lhs = Integer(static_cast<unsigned long>(fam.size())) *
                  pow2_int(static_cast<unsigned long>(n));
    if (lhs > pow2_int(static_cast<unsigned long>(p_(n + 1)))) {
      throw InputError("family " + std::to_string(n) + " violates |F_n| / 2^f(n+1) <= 2^-n");
    }
  }
}

BlockFamily BlockFamily::translated(const Word& x) const {
  std::vector<std::vector<Word>> out(F_.size());
  for (std::size_t k = 0; k < F_.size(); ++k) {
    Word y = p_.block(x, k);
    for (const auto& z : F_[k]) out[k].push_back(z.xor_with(y));
  }
  return BlockFamily(p_, std::move(out));
}

MembershipCount s_membership_count(const BlockFamily& fam, const Word& x, std::size_t N) {
  if (N > fam.size()) throw InputError("family table shorter than the requested window");
  MembershipCount r;
  for (std::size_t n = 0; n < N; ++n) {
    const auto& Fn = fam.at(n);
    if (std::binary_search(Fn.begin(), Fn.end(), fam.partition().block(x, n))) {
      ++r.count;
      r.hits.push_back(n);
    }
  }
  r.density = N == 0 ? Rational(0) : Rational(static_cast<long>(r.count), static_cast<long>(N));
  r.density.canonicalize();
  return r;
}

EincVerdict einc_inclusion(const BlockPartition& f, const std::vector<std::size_t>& g,
                           const BlockFamily& F, const BlockFamily& G, std::size_t N,
                           InclusionCriterion criterion) {
  if (!(F.partition() == f)) throw InputError("F is not a family over f");
  if (N + 1 >= g.size()) throw InputError("g table too short for the horizon");
  EincVerdict out;
  out.criterion = criterion;
  std::vector<std::size_t> idx;
  std::vector<bool> ok;
  for (std::size_t n = 0; n <= N; ++n) {
    bool good = true;
    for (std::size_t k = g[n]; k < g[n + 1] && good; ++k) {
      BlockPlace pl = place(n, k, g, F, G);
      SliceIndex si(G.at(n), pl.L, pl.off, pl.len);
      for (const auto& z : F.at(k)) {
        if (!si.accepts(z, criterion)) {
          good = false;
          if (!out.first_failure) out.first_failure = {n, k};
          break;
        }
      }
    }
    idx.push_back(n);
    ok.push_back(good);
  }
  out.verdict = make_verdict(std::move(idx), std::move(ok), N);
  return out;
}

bool ank_test(const Word& x, std::size_t n, std::size_t k, const std::vector<std::size_t>& g,
              const BlockFamily& F, const BlockFamily& G, InclusionCriterion criterion) {
  BlockPlace pl = place(n, k, g, F, G);
  Word y = F.partition().block(x, k);
  SliceIndex si(G.at(n), pl.L, pl.off, pl.len);
  for (const auto& z : F.at(k)) {
    if (!si.accepts(z.xor_with(y), criterion)) return false;
  }
  return true;
}

TreeSet xtilde_treeset(const std::vector<std::size_t>& g, const BlockFamily& F,
                       const BlockFamily& G, std::size_t n0, std::size_t D,
                       InclusionCriterion criterion) {
  const auto& f = F.partition();
  std::size_t K = constrained_blocks(f, F.size(), D);
  std::vector<std::optional<std::vector<Word>>> blocks(K);
  for (std::size_t n = n0; n + 1 < g.size() && n < G.size(); ++n) {
    for (std::size_t k = g[n]; k < g[n + 1] && k < K; ++k) {
      if (F.at(k).empty()) continue;
      auto allowed = allowed_words(place(n, k, g, F, G), F.at(k), G.at(n), criterion);
      if (allowed.empty()) {
        throw InputError("no word of block " + std::to_string(k) + " satisfies A_{" +
                         std::to_string(n) + "," + std::to_string(k) + "}; the set is empty");
      }
      blocks[k] = std::move(allowed);
    }
  }
  return blocks_set(f, K, std::move(blocks));
}

Filtration xtilde_filtration(const std::vector<std::size_t>& g, const BlockFamily& F,
                             const BlockFamily& G, std::size_t n0_max, std::size_t D,
                             InclusionCriterion criterion) {
  Filtration out;
  for (std::size_t n0 = 0; n0 <= n0_max; ++n0) {
    out.push_back(xtilde_treeset(g, F, G, n0, D, criterion));
  }
  return out;
}

IndexVerdict shelahM_check(const ShelahMWitness& w, const Word& x, std::size_t n_lo,
                           std::size_t n_hi) {
  if (n_hi + 1 >= w.g.size()) throw InputError("g table too short for the window");
  const auto& fv = w.f.values();
  std::size_t need = w.g[n_hi + 1];
  if (x.size() < need) throw InsufficientDepthError(need, x.size());
  if (fv.empty() || fv.back() < need) throw InsufficientDepthError(need, fv.empty() ? 0 : fv.back());
  Word y = w.y.prefix(need);
  std::vector<std::size_t> idx;
  std::vector<bool> ok;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    bool found = false;
    for (std::size_t k = 0; k + 1 < fv.size() && !found; ++k) {
      if (fv[k] < w.g[n] || fv[k + 1] > w.g[n + 1]) continue;
      found = x.slice(fv[k], fv[k + 1]) == y.slice(fv[k], fv[k + 1]);
    }
    idx.push_back(n);
    ok.push_back(found);
  }
  return make_verdict(std::move(idx), std::move(ok), n_hi);
}

BlockPartition me_fbuilder(const DyadicHFn& h, std::size_t K, std::size_t max_value) {
  if (!h.vanishing()) throw InputError("gauge does not vanish at 0");
  std::vector<std::size_t> f{0};
  for (std::size_t k = 0; k < K; ++k) {
    const std::size_t fk = f.back();
    const Rational target = pow2(-static_cast<long>(k + fk));
    std::size_t m = least_value(fk + 1, max_value, [&](std::size_t m) { return h.at(m).hi <= target; });
    if (m > max_value) {
      throw InputError("no f(" + std::to_string(k + 1) + ") up to " + std::to_string(max_value));
    }
    f.push_back(m);
  }
  for (std::size_t k = 0; k < K; ++k) {
    if (pow2(static_cast<long>(f[k])) * h.at(f[k + 1]).hi > pow2(-static_cast<long>(k))) {
      throw Error("me_fbuilder inequality fails at k=" + std::to_string(k));
    }
  }
  return BlockPartition(std::move(f));
}

Cover me_cover(const ShelahMWitness& w, std::size_t K, std::size_t budget) {
  const auto& f = w.f;
  if (f.blocks() < K) throw InputError("f table has fewer than K blocks");
  Cover out;
  std::vector<std::vector<std::size_t>> blocks_of_group;
  std::size_t total = 0;
  for (std::size_t n = 0; n + 1 < w.g.size(); ++n) {
    blocks_of_group.emplace_back();
    for (std::size_t k = 0; k < K; ++k) {
      if (f(k) < w.g[n] || f(k) >= w.g[n + 1]) continue;
      if (f(k) >= 40 || total + (std::size_t{1} << f(k)) > budget) throw ResourceLimitError(budget);
      total += std::size_t{1} << f(k);
      blocks_of_group.back().push_back(k);
    }
  }
  for (std::size_t n = 0; n < blocks_of_group.size(); ++n) {
    std::vector<Word> words;
    for (std::size_t k : blocks_of_group[n]) {
      Word tail = w.y.prefix(f(k + 1)).slice(f(k), f(k + 1));
      for (unsigned long long p = 0; p < (1ULL << f(k)); ++p) {
        words.push_back(bits_of(p, f(k)).concat(tail));
      }
    }
    out.add_group(words, n);
  }
  return out;
}

void validate(const ShelahNWitness& w) {
  if (w.H.size() > w.f.blocks()) throw InputError("more H_n than blocks of f");
  for (std::size_t n = 0; n < w.H.size(); ++n) {
    if (w.H[n].size() > n) {
      throw InputError("|H_" + std::to_string(n) + "| = " + std::to_string(w.H[n].size()) +
                       " exceeds " + std::to_string(n));
    }
    for (const auto& word : w.H[n]) {
      if (word.size() != w.f.block_length(n)) {
        throw InputError("word '" + word.str() + "' does not fit block " + std::to_string(n));
      }
    }
  }
}

IndexVerdict shelahN_check(const ShelahNWitness& w, const Word& x, std::size_t n_lo,
                           std::size_t n_hi) {
  validate(w);
  if (n_hi >= w.H.size()) throw InputError("H table too short for the window");
  std::vector<std::size_t> idx;
  std::vector<bool> ok;
  for (std::size_t k = n_lo; k <= n_hi; ++k) {
    const auto& Hk = w.H[k];
    idx.push_back(k);
    ok.push_back(std::find(Hk.begin(), Hk.end(), w.f.block(x, k)) != Hk.end());
  }
  return make_verdict(std::move(idx), std::move(ok), n_hi);
}

IndexedFiltration shelahN_filtration(const ShelahNWitness& w, std::size_t D) {
  validate(w);
  std::size_t K = constrained_blocks(w.f, w.H.size(), D);
  IndexedFiltration out;
  for (std::size_t k = 0; k < K; ++k) {
    if (w.H[k].empty()) out.first = k + 1;
  }
  for (std::size_t n = out.first; n < K; ++n) {
    std::vector<std::optional<std::vector<Word>>> blocks(K);
    for (std::size_t k = n; k < K; ++k) blocks[k] = w.H[k];
    out.sets.push_back(blocks_set(w.f, K, std::move(blocks)));
  }
  return out;
}

Growth nadd_growth_from(const DyadicHFn& h) {
  return [h](std::size_t n) -> Integer {
    if (n == 0) return Integer(0);
    return floor(Rational(1) / h.at(n - 1).hi);
  };
}

Growth tprime_growth_from(const DyadicHFn& h) {
  return [h](std::size_t n) -> Integer { return floor(Rational(1) / h.at(n).hi); };
}

BlockPartition nadd_fbuilder(const Growth& F, std::size_t K, std::size_t max_value) {
  std::vector<std::size_t> f{0};
  for (std::size_t n = 0; n < K; ++n) {
    Integer lhs = pow2_int(static_cast<unsigned long>(f.back())) * factorial(n + 1);
    std::size_t m = f.back() + 1;
    while (m <= max_value && F(m) < lhs) ++m;
    if (m > max_value) {
      throw InputError("no f(" + std::to_string(n + 1) + ") up to " + std::to_string(max_value) +
                       "; the growth function is too slow");
    }
    f.push_back(m);
  }
  for (std::size_t n = 0; n < K; ++n) {
    if (pow2_int(static_cast<unsigned long>(f[n])) * factorial(n + 1) > F(f[n + 1])) {
      throw Error("nadd_fbuilder inequality fails at n=" + std::to_string(n));
    }
  }
  return BlockPartition(std::move(f));
}

BoxReport nadd_box_check(const ShelahNWitness& w, const Growth& F, const DyadicHFn& h,
                         std::size_t D, std::size_t budget) {
  auto filt = shelahN_filtration(w, D);
  BoxReport r;
  r.passed = true;
  r.window_value = 0;
  const std::size_t K = filt.first + filt.sets.size();
  if (K == 0) {
    r.note = "no constrained block within depth " + std::to_string(D);
    return r;
  }
  const std::size_t top = w.f(K);
  for (std::size_t i = 1; i <= top; ++i) {
    if (Rational(F(i)) * h.at(i - 1).hi > 1) {
      r.passed = false;
      r.note = "growth exceeds 1/h(2^(1-i)) at i=" + std::to_string(i);
    }
  }
  for (std::size_t s = 0; s < filt.sets.size(); ++s) {
    const std::size_t n = filt.first + s;
    if (n + 1 > K) break;
    auto counts = trace_counts(filt.sets[s], top, budget);
    for (std::size_t i = w.f(n + 1); i < top; ++i) {
      std::size_t k = *w.f.block_of(i);
      BoxRow row;
      row.n = n;
      row.i = i;
      row.count = counts[i];
      row.bound = pow2_int(static_cast<unsigned long>(w.f(n)));
      for (std::size_t j = n; j <= k; ++j) row.bound *= static_cast<unsigned long>(w.H[j].size());
      row.value = Rational(row.count) * h.at(i - 1).hi;
      row.passed = row.count <= row.bound && row.count <= F(i) && row.value <= 1;
      if (!row.passed) r.passed = false;
      if (row.value > r.window_value) r.window_value = row.value;
      r.rows.push_back(std::move(row));
    }
  }
  return r;
}

void validate(const TPrimeWitness& w) {
  for (std::size_t i = 0; i < w.I.size(); ++i) {
    if (i > 0 && w.I[i] <= w.I[i - 1]) throw InputError("I must be strictly increasing");
  }
  for (const auto& [n, Hn] : w.H) {
    if (!std::binary_search(w.I.begin(), w.I.end(), n)) {
      throw InputError("H_" + std::to_string(n) + " given for an index outside I");
    }
    if (n >= w.f.blocks()) throw InputError("H_" + std::to_string(n) + " beyond the blocks of f");
    if (n >= w.g.size()) throw InputError("g table too short for index " + std::to_string(n));
    if (Integer(static_cast<unsigned long>(Hn.size())) > w.g[n]) {
      throw InputError("|H_" + std::to_string(n) + "| exceeds g(" + std::to_string(n) + ")");
    }
    for (const auto& word : Hn) {
      if (word.size() != w.f.block_length(n)) {
        throw InputError("word '" + word.str() + "' does not fit block " + std::to_string(n));
      }
    }
  }
}

IndexVerdict tprime_check(const TPrimeWitness& w, const Word& x, std::size_t n_lo,
                          std::size_t n_hi) {
  validate(w);
  std::vector<std::size_t> idx;
  std::vector<bool> ok;
  for (std::size_t n : w.I) {
    if (n < n_lo || n > n_hi) continue;
    auto it = w.H.find(n);
    bool in = false;
    if (it != w.H.end()) {
      in = std::find(it->second.begin(), it->second.end(), w.f.block(x, n)) != it->second.end();
    }
    idx.push_back(n);
    ok.push_back(in);
  }
  return make_verdict(std::move(idx), std::move(ok), n_hi);
}

BlockPartition tprime_fbuilder(const Growth& G, const Growth& g, std::size_t K,
                               std::size_t max_value) {
  std::vector<std::size_t> f{0};
  for (std::size_t n = 0; n < K; ++n) {
    Integer lhs = pow2_int(static_cast<unsigned long>(f.back())) * g(n);
    std::size_t m = f.back() + 1;
    while (m <= max_value && G(m) < lhs) ++m;
    if (m > max_value) {
      throw InputError("no f(" + std::to_string(n + 1) + ") up to " + std::to_string(max_value) +
                       "; the growth function is too slow");
    }
    f.push_back(m);
  }
  for (std::size_t n = 0; n < K; ++n) {
    if (pow2_int(static_cast<unsigned long>(f[n])) * g(n) > G(f[n + 1])) {
      throw Error("tprime_fbuilder inequality fails at n=" + std::to_string(n));
    }
  }
  return BlockPartition(std::move(f));
}

BoxReport tprime_lbox_check(const TPrimeWitness& w, const Growth& G, const DyadicHFn& h,
                            std::size_t D, std::size_t budget) {
  validate(w);
  std::vector<std::size_t> I;
  for (std::size_t n : w.I) {
    if (n < w.f.blocks() && w.f(n + 1) <= D) I.push_back(n);
  }
  BoxReport r;
  r.passed = true;
  r.window_value = 0;
  if (I.empty()) {
    r.passed = false;
    r.note = "no index of I has its block within depth " + std::to_string(D);
    return r;
  }
  const std::size_t K = I.back() + 1;
  auto H = [&](std::size_t n) {
    auto it = w.H.find(n);
    return it == w.H.end() ? std::vector<Word>{} : it->second;
  };
  std::size_t first = 0;
  for (std::size_t pos = 0; pos < I.size(); ++pos) {
    if (H(I[pos]).empty()) first = pos + 1;
  }
  for (std::size_t pos = first; pos < I.size(); ++pos) {
    const std::size_t k = I[pos];
    std::vector<std::optional<std::vector<Word>>> blocks(K);
    for (std::size_t q = pos; q < I.size(); ++q) blocks[I[q]] = H(I[q]);
    TreeSet xk = blocks_set(w.f, K, std::move(blocks));
    auto counts = trace_counts(xk, w.f(K), budget);
    std::vector<Rational> values;
    for (std::size_t q = pos; q < I.size(); ++q) {
      const std::size_t n = I[q];
      const std::size_t i = w.f(n + 1);
      BoxRow row;
      row.n = k;
      row.i = i;
      row.count = counts[i];
      row.bound = pow2_int(static_cast<unsigned long>(w.f(n))) *
                  static_cast<unsigned long>(H(n).size());
      row.value = Rational(row.count) * h.at(i).hi;
      bool growth_ok = Rational(G(i)) * h.at(i).hi <= 1;
      row.passed = row.count <= row.bound && row.count <= G(i) && growth_ok && row.value <= 1;
      if (!row.passed) r.passed = false;
      values.push_back(row.value);
      r.rows.push_back(std::move(row));
    }
    Rational window = *std::min_element(values.begin() + static_cast<long>(values.size() / 2),
                                        values.end());
    if (window > r.window_value) r.window_value = window;
  }
  if (r.window_value > 1) r.passed = false;
  if (first > 0) {
    r.note = "sets X_k with k <= " + std::to_string(I[first - 1]) + " are empty and skipped";
  }
  return r;
}

TPrimeWitness tprime_from_dpnull_witness(const BlockPartition& f, const DnullWitness& w) {
  TPrimeWitness out;
  out.f = f;
  out.I = w.I;
  for (std::size_t n : w.I) {
    if (n + 1 > f.blocks()) throw InputError("f table too short for index " + std::to_string(n));
    if (n >= w.eps.size() || w.eps[n] != pow2(-static_cast<long>(f(n + 1)))) {
      throw InputError("eps_" + std::to_string(n) + " is not 2^-f(n+1)");
    }
    auto it = w.families.find(n);
    std::vector<Word> Hn;
    if (it != w.families.end()) {
      if (it->second.size() > n) {
        throw InputError("|F_" + std::to_string(n) + "| exceeds " + std::to_string(n));
      }
      for (const auto& p : it->second) {
        if (p.size() < f(n + 1)) {
          throw InputError("member '" + p.str() + "' of F_" + std::to_string(n) +
                           " is not a cylinder of length f(n+1)");
        }
        Hn.push_back(p.slice(f(n), f(n + 1)));
      }
    }
    std::sort(Hn.begin(), Hn.end());
    Hn.erase(std::unique(Hn.begin(), Hn.end()), Hn.end());
    out.H[n] = std::move(Hn);
  }
  std::size_t top = w.I.empty() ? 0 : w.I.back();
  for (std::size_t n = 0; n <= top; ++n) out.g.push_back(Integer(static_cast<unsigned long>(n)));
  validate(out);
  return out;
}

CIDensity ci_density(const IndexSpec& I) {
  if (!I.is_infinite()) throw InputError("index set must be infinite");
  auto [lo, hi] = I.complement_density();
  return {lo, hi, I.as_periodic() != nullptr};
}

}  // namespace cantordim
