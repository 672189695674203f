#include "cantordim/measures.hpp"

#include <algorithm>
#include <unordered_map>

#include "cantordim/errors.hpp"
#include "cantordim/tree_ops.hpp"

namespace cantordim {

namespace {

struct LevelChild {
  std::uint32_t path;  ///< the stride bits read, most significant first
  StateId state;
};

void level_children(Explorer& ex, StateId s, std::size_t stride, std::vector<LevelChild>& out) {
  out.assign(1, LevelChild{0, s});
  std::vector<LevelChild> next;
  for (std::size_t i = 0; i < stride; ++i) {
    next.clear();
    for (const auto& c : out) {
      for (int bit = 0; bit < 2; ++bit) {
        StateId t = ex.child(c.state, bit);
        if (t != kNoState) next.push_back({(c.path << 1) | static_cast<std::uint32_t>(bit), t});
      }
    }
    out.swap(next);
  }
}

/// Distinct states of each level from m to D with child links, plus multiplicities at level m.
struct LevelGraph {
  std::size_t m = 0, depth = 0, stride = 1;
  std::vector<std::vector<StateId>> states;
  std::vector<std::vector<std::vector<std::uint32_t>>> kids;
  std::vector<Integer> mult;
  std::vector<std::unordered_map<StateId, std::uint32_t>> index;
};

LevelGraph build_levels(Explorer& ex, std::size_t stride, std::size_t m, std::size_t depth) {
  LevelGraph g;
  g.m = m;
  g.depth = depth;
  g.stride = stride;
  std::vector<LevelChild> buf;
  std::map<StateId, Integer> cur{{ex.root(), Integer(1)}};
  for (std::size_t k = 0; k < m; ++k) {
    std::map<StateId, Integer> next;
    for (const auto& [s, mu] : cur) {
      level_children(ex, s, stride, buf);
      for (const auto& c : buf) {
        auto [it, fresh] = next.try_emplace(c.state, 0);
        if (fresh) ex.charge();
        it->second += mu;
      }
    }
    cur = std::move(next);
  }
  g.states.emplace_back();
  g.index.emplace_back();
  for (const auto& [s, mu] : cur) {
    g.index[0].emplace(s, static_cast<std::uint32_t>(g.states[0].size()));
    g.states[0].push_back(s);
    g.mult.push_back(mu);
  }
  for (std::size_t k = m; k < depth; ++k) {
    const std::size_t li = k - m;
    g.states.emplace_back();
    g.index.emplace_back();
    g.kids.emplace_back(g.states[li].size());
    for (std::size_t i = 0; i < g.states[li].size(); ++i) {
      level_children(ex, g.states[li][i], stride, buf);
      for (const auto& c : buf) {
        auto [it, fresh] =
            g.index[li + 1].try_emplace(c.state, static_cast<std::uint32_t>(g.states[li + 1].size()));
        if (fresh) {
          ex.charge();
          g.states[li + 1].push_back(c.state);
        }
        g.kids[li][i].push_back(it->second);
      }
    }
  }
  return g;
}

struct LevelDP {
  std::vector<std::vector<Rational>> upper, lower;
  std::vector<std::vector<bool>> take_parent;
};

LevelDP run_dp(const LevelGraph& g, const DyadicHFn& h, const Rational& leaf_lower) {
  const std::size_t L = g.depth - g.m;
  LevelDP dp;
  dp.upper.resize(L + 1);
  dp.lower.resize(L + 1);
  dp.take_parent.resize(L + 1);
  const Interval hD = h.at(g.depth);
  dp.upper[L].assign(g.states[L].size(), hD.hi);
  dp.lower[L].assign(g.states[L].size(), leaf_lower);
  dp.take_parent[L].assign(g.states[L].size(), true);
  for (std::size_t li = L; li-- > 0;) {
    const Interval hk = h.at(g.m + li);
    const std::size_t n = g.states[li].size();
    dp.upper[li].resize(n);
    dp.lower[li].resize(n);
    dp.take_parent[li].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& ks = g.kids[li][i];
      if (ks.size() == 1) {
        dp.upper[li][i] = dp.upper[li + 1][ks[0]];
        dp.lower[li][i] = dp.lower[li + 1][ks[0]];
        dp.take_parent[li][i] = false;
        continue;
      }
      Rational su(0), sl(0);
      for (auto c : ks) {
        su += dp.upper[li + 1][c];
        sl += dp.lower[li + 1][c];
      }
      dp.take_parent[li][i] = hk.hi <= su;
      dp.upper[li][i] = std::min(Rational(hk.hi), su);
      dp.lower[li][i] = std::min(Rational(hk.lo), sl);
    }
  }
  return dp;
}

void check_args(const DyadicHFn& h, std::size_t m, std::size_t depth) {
  if (depth < m) throw InputError("truncation depth must be at least the scale index");
  if (!h.defined_to(depth)) throw DepthExceededError(depth, h.n_max());
}

Interval sup_of(const std::vector<Interval>& v) {
  Interval r = v.front();
  for (const auto& x : v) r = max(r, x);
  return r;
}

Interval inf_of(const std::vector<Interval>& v) {
  Interval r = v.front();
  for (const auto& x : v) r = min(r, x);
  return r;
}

}  // namespace

Rational tail_mass_bound(const TreeSet& set, const DyadicHFn& h, std::size_t d) {
  const auto& prof = set.profile();
  if (!prof || !prof->periodic || !h.symbolic() || !h.symbolic()->pure_power()) return 0;
  const PeriodicBits& pb = *prof->periodic;
  const std::size_t stride = set.stride();
  const std::size_t pre = pb.preperiod().size();
  const std::size_t P = lcm_bounded(pb.period().size(), stride);
  const std::size_t k = pb.ones_below(pre + P) - pb.ones_below(pre);
  if (k == 0) return 0;
  // One period multiplies the ratio h(diam) / mass by 2^(k - s P / stride).
  Rational delta = Rational(static_cast<unsigned long>(k)) -
                   h.symbolic()->s * Rational(static_cast<unsigned long>(P / stride));
  if (sgn(delta) < 0) return 0;
  std::optional<Rational> best;
  std::size_t free_seen = 0;
  const std::size_t end = std::max(d, pre) + P;
  for (std::size_t b = d; b < end; ++b) {
    if (!pb.at(b)) continue;
    Rational term = h.at(b / stride).lo * pow2(static_cast<long>(free_seen));
    if (!best || term < *best) best = term;
    ++free_seen;
  }
  return best.value_or(Rational(0));
}

MeasureBound hausdorff_measure_delta(const TreeSet& set, const DyadicHFn& h, std::size_t m,
                                     std::size_t depth, const MeasureOptions& opts) {
  check_args(h, m, depth);
  Explorer ex(set, opts.budget);
  LevelGraph g = build_levels(ex, set.stride(), m, depth);
  LevelDP dp = run_dp(g, h, tail_mass_bound(set, h, depth * set.stride()));
  MeasureBound out;
  out.lower = 0;
  out.upper = 0;
  for (std::size_t i = 0; i < g.states[0].size(); ++i) {
    out.lower += Rational(g.mult[i]) * dp.lower[0][i];
    out.upper += Rational(g.mult[i]) * dp.upper[0][i];
  }
  out.scale_m = m;
  out.depth = depth;
  out.gauge = h.describe();
  return out;
}

Cover extract_optimal_cover(const TreeSet& set, const DyadicHFn& h, std::size_t m,
                            std::size_t depth, const MeasureOptions& opts) {
  check_args(h, m, depth);
  Explorer ex(set, opts.budget);
  LevelGraph g = build_levels(ex, set.stride(), m, depth);
  LevelDP dp = run_dp(g, h, Rational(0));
  const std::size_t stride = set.stride();
  Cover cover;
  cover.stride = stride;
  std::vector<LevelChild> buf;
  struct Item {
    StateId s;
    std::size_t level;
    Word w;
  };
  std::vector<Item> stack{{ex.root(), 0, Word()}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    ex.charge();
    if (it.level >= m) {
      std::size_t li = it.level - m;
      std::uint32_t idx = g.index[li].at(it.s);
      if (it.level == depth || (dp.take_parent[li][idx] && g.kids[li][idx].size() > 1)) {
        cover.elements.push_back(it.w);
        continue;
      }
    }
    level_children(ex, it.s, stride, buf);
    for (auto c = buf.rbegin(); c != buf.rend(); ++c) {
      Word w = it.w;
      for (std::size_t b = stride; b-- > 0;) w.push_back(static_cast<int>((c->path >> b) & 1u));
      stack.push_back({c->state, it.level + 1, std::move(w)});
    }
  }
  return cover;
}

Rational cover_cost(const Cover& cover, const DyadicHFn& h) {
  Rational total(0);
  for (std::size_t i = 0; i < cover.elements.size(); ++i) total += h.at(cover.level(i)).hi;
  return total;
}

MassCertificate mass_lower_certificate(const TreeSet& set, const DyadicHFn& h,
                                       const TreeMass& lambda, std::size_t depth,
                                       const MeasureOptions& opts) {
  const std::size_t stride = set.stride();
  const std::size_t max_bits = depth * stride;
  const std::size_t horizon = depth + opts.lookahead;
  if (!h.defined_to(horizon)) throw DepthExceededError(horizon, h.n_max());
  Explorer ex(set, opts.budget);
  MassCertificate cert;
  cert.depth = depth;
  auto fail = [&](Word node, std::string why) {
    cert.ok = false;
    cert.failure_node = std::move(node);
    cert.reason = std::move(why);
    return cert;
  };
  auto h_at_node = [&](StateId s, std::size_t bits) -> std::optional<Rational> {
    LocalDiameter d = local_diameter(ex, s, bits, stride, horizon);
    if (d.is_point()) return std::nullopt;
    return h.at(d).lo;
  };

  if (const auto* uni = std::get_if<UniformSplit>(&lambda)) {
    if (sgn(uni->total) < 0) throw InputError("negative total mass");
    std::map<std::pair<StateId, Rational>, Word> level{{{ex.root(), uni->total}, Word()}};
    for (std::size_t j = 0; j <= max_bits; ++j) {
      std::map<std::pair<StateId, Rational>, Word> next;
      for (const auto& [key, word] : level) {
        const auto& [s, mass] = key;
        ex.charge();
        if (sgn(mass) > 0) {
          auto hv = h_at_node(s, j);
          if (!hv) return fail(word, "no branching within lookahead below a node with mass");
          if (mass > *hv) return fail(word, "mass exceeds h(diameter)");
        }
        if (j == max_bits) continue;
        auto cs = ex.children(s);
        int cnt = (cs[0] != kNoState) + (cs[1] != kNoState);
        for (int b = 0; b < 2; ++b) {
          if (cs[b] == kNoState) continue;
          next.try_emplace({cs[b], Rational(mass / cnt)}, word.extended(b));
        }
      }
      level = std::move(next);
    }
    cert.ok = true;
    cert.value = uni->total;
    const auto& prof = set.profile();
    if (prof && prof->periodic && h.symbolic() && h.symbolic()->pure_power()) {
      const auto& pb = *prof->periodic;
      std::size_t P = lcm_bounded(pb.period().size(), stride);
      std::size_t k = pb.ones_below(pb.preperiod().size() + P) - pb.ones_below(pb.preperiod().size());
      Rational delta = Rational(static_cast<unsigned long>(k)) -
                       h.symbolic()->s * Rational(static_cast<unsigned long>(P / stride));
      cert.exact = sgn(delta) >= 0 && max_bits >= pb.preperiod().size() + P;
    }
    return cert;
  }

  const auto& table = std::get<MassTable>(lambda).mass;
  auto mass_of = [&](const Word& w) {
    auto it = table.find(w);
    return it == table.end() ? Rational(0) : it->second;
  };
  if (!table.count(Word())) throw InputError("mass table has no entry for the root cylinder");
  std::vector<Word> order;
  for (const auto& [w, mass] : table) {
    if (w.size() > max_bits) continue;
    order.push_back(w);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  for (const auto& w : order) {
    const Rational mass = mass_of(w);
    ex.charge();
    if (sgn(mass) < 0) return fail(w, "negative mass");
    if (sgn(mass) == 0) continue;
    StateId s = ex.walk(w);
    if (s == kNoState) return fail(w, "mass outside the set");
    if (!w.empty() && !table.count(w.prefix(w.size() - 1))) return fail(w, "parent has no mass entry");
    if (w.size() < max_bits && mass != mass_of(w.extended(0)) + mass_of(w.extended(1))) {
      return fail(w, "mass is not additive");
    }
    auto hv = h_at_node(s, w.size());
    if (!hv) return fail(w, "no branching within lookahead below a node with mass");
    if (mass > *hv) return fail(w, "mass exceeds h(diameter)");
  }
  cert.ok = true;
  cert.value = mass_of(Word());
  return cert;
}

IndexSpec sparse_I_builder(const DyadicHFn& h, std::size_t depth) {
  if (depth < 2) throw InputError("sparse index builder needs depth >= 2");
  const DyadicHFn r1 = DyadicHFn::power(Rational(1), std::max(depth, h.n_max()));
  if (!precede(h, r1, depth, Rational(1, 2)).holds()) {
    throw InputError("h(2^-n) / 2^-n does not tend to infinity (h ≺ r^1 fails)");
  }
  if (h.symbolic() && h.symbolic()->pure_power()) {
    // cap(n) = floor(n (1 - s)); the greedy choice keeps |n ∩ I| = cap(n), periodic in the
    // denominator of 1 - s.
    Rational alpha = 1 - h.symbolic()->s;
    std::size_t q = alpha.get_den().get_ui();
    std::string bits;
    for (std::size_t i = 0; i < q; ++i) {
      Rational a = alpha * Rational(static_cast<unsigned long>(i));
      Rational b = alpha * Rational(static_cast<unsigned long>(i + 1));
      bits.push_back(floor(b) > floor(a) ? '1' : '0');
    }
    return IndexSpec::periodic("", bits);
  }
  std::vector<long> cap(depth + 1);
  for (std::size_t n = 1; n <= depth; ++n) {
    Rational v = h.at(n).lo * pow2(static_cast<long>(n));
    if (v < 1) throw InputError("h(2^-n) < 2^-n at n=" + std::to_string(n));
    cap[n] = floor_log2(v);
  }
  std::vector<long> sufmin(depth + 1);
  sufmin[depth] = cap[depth];
  for (std::size_t n = depth; n-- > 1;) sufmin[n] = std::min(cap[n], sufmin[n + 1]);
  std::string bits;
  long count = 0;
  for (std::size_t i = 0; i < depth; ++i) {
    if (count + 1 <= sufmin[i + 1]) {
      bits.push_back('1');
      ++count;
    } else {
      bits.push_back('0');
    }
  }
  return IndexSpec::periodic(bits, "0");
}

ContentSequence box_content_sequence(const TreeSet& set, const DyadicHFn& h, std::size_t n_lo,
                                     std::size_t n_hi, std::size_t budget) {
  if (n_lo > n_hi) throw InputError("empty content range");
  if (!h.defined_to(n_hi)) throw DepthExceededError(n_hi, h.n_max());
  const std::size_t stride = set.stride();
  auto counts = trace_counts(set, n_hi * stride, budget);
  ContentSequence seq;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const Integer& c = counts[n * stride];
    seq.entries.push_back({n, c, scale(h.at(n), Rational(c))});
  }
  seq.window_from = std::max(n_lo, n_hi / 2);
  std::vector<Interval> win;
  for (const auto& e : seq.entries) {
    if (e.n >= seq.window_from) win.push_back(e.content);
  }
  seq.tail_sup = sup_of(win);
  seq.tail_inf = inf_of(win);
  return seq;
}

DimensionEstimate box_dimensions(const TreeSet& set, std::size_t n_lo, std::size_t n_hi,
                                 std::size_t budget) {
  if (n_hi == 0 || n_lo > n_hi) throw InputError("dimension range must contain a positive level");
  const std::size_t stride = set.stride();
  auto counts = trace_counts(set, n_hi * stride, budget);
  DimensionEstimate est;
  est.window_from = std::max<std::size_t>({n_lo, n_hi / 2, 1});
  bool first = true;
  for (std::size_t n = std::max<std::size_t>(n_lo, 1); n <= n_hi; ++n) {
    double r = log2_double(counts[n * stride]) / static_cast<double>(n);
    est.ratios.emplace_back(n, r);
    if (n < est.window_from) continue;
    est.lower = first ? r : std::min(est.lower, r);
    est.upper = first ? r : std::max(est.upper, r);
    first = false;
  }
  if (const auto& prof = set.profile(); prof && prof->density) {
    Rational s(static_cast<unsigned long>(stride));
    est.closed_form = std::make_pair(Rational(prof->density->first * s),
                                     Rational(prof->density->second * s));
  }
  return est;
}

DboxWitness dbox_on_filtration(const Filtration& f, const DyadicHFn& h, std::size_t n_lo,
                               std::size_t n_hi, std::size_t budget) {
  if (f.empty()) throw InputError("empty filtration");
  for (std::size_t k = 0; k + 1 < f.size(); ++k) {
    if (f[k].stride() != f[k + 1].stride()) throw InputError("filtration mixes strides");
    if (!trace_included(f[k], f[k + 1], n_hi * f[k].stride(), budget)) {
      throw InputError("non-monotone filtration at set " + std::to_string(k));
    }
  }
  DboxWitness w;
  for (const auto& x : f) w.per_set.push_back(box_content_sequence(x, h, n_lo, n_hi, budget).tail_inf);
  w.value = sup_of(w.per_set);
  return w;
}

bool ChainReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

ChainReport chain_check(const TreeSet& set, const DyadicHFn& h, std::size_t m, std::size_t depth,
                        const std::optional<Filtration>& f, const MeasureOptions& opts) {
  ChainReport rep;
  rep.hausdorff = hausdorff_measure_delta(set, h, m, depth, opts);
  rep.upper_hausdorff = rep.hausdorff;
  auto seq = box_content_sequence(set, h, m, depth, opts.budget);
  rep.ubox = seq.tail_sup;
  rep.min_content = seq.entries.front().content.hi;
  for (const auto& e : seq.entries) rep.min_content = std::min(rep.min_content, e.content.hi);

  const Filtration filt = f.value_or(Filtration{set});
  const std::size_t bits = depth * set.stride();
  auto dw = dbox_on_filtration(filt, h, m, depth, opts.budget);
  rep.dbox = dw.value;

  const auto& H = rep.hausdorff;
  rep.checks.push_back({"H lower <= H upper", H.lower <= H.upper,
                        to_string(H.lower) + " <= " + to_string(H.upper)});
  rep.checks.push_back({"H = uH (compact set)", true, "upper Hausdorff measure aliased"});
  rep.checks.push_back({"H <= N h on [m, D]", H.upper <= rep.min_content,
                        to_string(H.upper) + " <= " + to_string(rep.min_content)});
  bool inside = true;
  for (const auto& x : filt) inside = inside && trace_included(x, set, bits, opts.budget);
  bool exhausts = traces_equal(filt.back(), set, bits, opts.budget);
  if (exhausts) {
    rep.checks.push_back({"uH <= dbox", H.lower <= rep.dbox->hi,
                          to_string(H.lower) + " <= " + to_string(rep.dbox->hi)});
  } else {
    rep.checks.push_back({"uH <= dbox", true, "filtration does not exhaust the set at depth D"});
  }
  rep.checks.push_back({"dbox <= ubox", inside && rep.dbox->lo <= rep.ubox.hi,
                        inside ? to_string(rep.dbox->lo) + " <= " + to_string(rep.ubox.hi)
                               : "filtration member not contained in the set"});
  rep.checks.push_back({"H <= ubox", H.lower <= rep.ubox.hi,
                        to_string(H.lower) + " <= " + to_string(rep.ubox.hi)});
  return rep;
}

bool ProductReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

ProductReport product_inequality_check(const TreeSet& a, const TreeSet& b, const DyadicHFn& h,
                                       const DyadicHFn& g, std::size_t m, std::size_t depth,
                                       const MeasureOptions& opts) {
  ProductReport rep;
  const TreeSet p = TreeSet::product(a, b);
  const DyadicHFn hg = multiply(h, g);
  auto ca = trace_counts(a, depth, opts.budget);
  auto cb = trace_counts(b, depth, opts.budget);
  auto cp = trace_counts(p, 2 * depth, opts.budget);
  bool counts_ok = true;
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= depth && counts_ok; ++n) {
    if (cp[2 * n] != ca[n] * cb[n]) {
      counts_ok = false;
      bad = n;
    }
  }
  rep.checks.push_back({"(i) N_AxB = N_A N_B", counts_ok,
                        counts_ok ? "levels 0.." + std::to_string(depth)
                                  : "differs at level " + std::to_string(bad)});
  auto sa = box_content_sequence(a, h, m, depth, opts.budget);
  auto sb = box_content_sequence(b, g, m, depth, opts.budget);
  auto sp = box_content_sequence(p, hg, m, depth, opts.budget);
  rep.checks.push_back({"(i) ubox^hg(AxB) <= ubox^h(A) ubox^g(B)",
                        sp.tail_sup.lo <= sa.tail_sup.hi * sb.tail_sup.hi,
                        to_string(sp.tail_sup.lo) + " <= " +
                            to_string(Rational(sa.tail_sup.hi * sb.tail_sup.hi))});

  auto Ha = hausdorff_measure_delta(a, h, m, depth, opts);
  auto Hb = hausdorff_measure_delta(b, g, m, depth, opts);
  auto Hp = hausdorff_measure_delta(p, hg, m, depth, opts);
  Rational nb_g(0);
  for (const auto& e : sb.entries) nb_g = std::max(nb_g, Rational(e.content.hi));
  Rational rhs = Ha.upper * nb_g;
  rep.checks.push_back({"(ii) H^hg(AxB) <= H^h(A) max N_B g", Hp.upper <= rhs,
                        to_string(Hp.upper) + " <= " + to_string(rhs)});

  bool finite = finite_order(h, depth).holds() && finite_order(g, depth).holds();
  if (!finite) {
    rep.checks.push_back({"(iii)-(vi) finite order", true, "gauges not of finite order; skipped"});
    return rep;
  }
  Rational lhs3 = Ha.lower * Hb.lower;
  rep.checks.push_back({"(iii) H^h(A) H^g(B) <= H^hg(AxB)", lhs3 <= Hp.upper,
                        to_string(lhs3) + " <= " + to_string(Hp.upper)});
  rep.checks.push_back({"(iv) uH^h(A) uH^g(B) <= uH^hg(AxB)", lhs3 <= Hp.upper,
                        "upper Hausdorff measures aliased on compact sets"});
  auto ratio = [](const Rational& num, const Rational& den) -> std::optional<Rational> {
    if (sgn(num) == 0) return Rational(0);
    if (sgn(den) == 0) return std::nullopt;
    return Rational(num / den);
  };
  rep.constant_v = ratio(sa.tail_sup.hi * sb.tail_inf.hi, sp.tail_sup.lo);
  rep.constant_vi = ratio(sa.tail_inf.hi * sb.tail_inf.hi, sp.tail_inf.lo);
  rep.checks.push_back({"(v) ubox^h(A) dbox^g(B) <= c ubox^hg(AxB)", rep.constant_v.has_value(),
                        rep.constant_v ? "empirical c = " + to_string(*rep.constant_v)
                                       : "product content vanishes"});
  rep.checks.push_back({"(vi) dbox^h(A) dbox^g(B) <= c dbox^hg(AxB)", rep.constant_vi.has_value(),
                        rep.constant_vi ? "empirical c = " + to_string(*rep.constant_vi)
                                        : "product content vanishes"});
  return rep;
}

LipschitzReport lipschitz_image_check(const TreeSet& set, const BlockMap& map, const DyadicHFn& h,
                                      std::size_t m, std::size_t depth,
                                      const MeasureOptions& opts) {
  LipschitzReport rep;
  switch (map.kind) {
    case BlockMap::Kind::Identity: {
      rep.map = "identity";
      rep.image = hausdorff_measure_delta(set, h, m, depth, opts);
      rep.bound = rep.image.upper;
      rep.rule = "H(E) <= H(E)";
      break;
    }
    case BlockMap::Kind::Shift: {
      if (!h.symbolic() || !h.symbolic()->pure_power()) {
        throw InputError("the Lipschitz check needs a power gauge r^s");
      }
      const std::size_t k = map.k;
      rep.map = "shift by " + std::to_string(k);
      rep.image = hausdorff_measure_delta(TreeSet::shift(set, k), h, m, depth, opts);
      // 2^(ks) h(2^-n) = h(2^-(n-k)); the rescaled gauge reuses h's own values.
      std::vector<Interval> scaled(depth + k + 1);
      for (std::size_t n = 0; n < scaled.size(); ++n) scaled[n] = h.at(n >= k ? n - k : 0);
      auto src = hausdorff_measure_delta(set, DyadicHFn::from_table(scaled), m + k, depth + k, opts);
      rep.bound = src.upper;
      rep.rule = "H^s(shift E) <= 2^(" + std::to_string(k) + "s) H^s(E), s = " +
                 to_string(h.symbolic()->s);
      break;
    }
    case BlockMap::Kind::Dilate: {
      const std::size_t r = map.k;
      if (r == 0) throw InputError("dilation factor must be positive");
      rep.map = "repeat each bit " + std::to_string(r) + " times";
      rep.image = hausdorff_measure_delta(TreeSet::dilate(set, r), h, r * m, r * depth, opts);
      std::vector<Interval> hg(depth + 1);
      for (std::size_t n = 0; n <= depth; ++n) hg[n] = h.at(r * n);
      auto src = hausdorff_measure_delta(set, DyadicHFn::from_table(hg), m, depth, opts);
      rep.bound = src.upper;
      rep.rule = "H^h(f E) <= H^(h o g)(E) with modulus g(t) = t^" + std::to_string(r);
      break;
    }
  }
  rep.passed = rep.image.upper <= rep.bound;
  return rep;
}

SplitResult increasing_sets_split(const TreeSet& set, const DyadicHFn& h, const Rational& s,
                                  std::size_t depth, const std::optional<Filtration>& candidates,
                                  std::size_t budget) {
  SplitResult res;
  auto content = [&](const TreeSet& x) {
    return box_content_sequence(x, h, depth / 2, depth, budget).tail_sup;
  };
  Interval whole = content(set);
  if (whole.hi < s) {
    res.ok = true;
    res.sets = {set};
    res.contents = {whole};
    res.reason = "the set itself has content below s";
    return res;
  }
  if (!candidates || candidates->empty()) {
    res.reason = "no filtration witness with content below s found to depth " + std::to_string(depth);
    return res;
  }
  const std::size_t bits = depth * set.stride();
  for (std::size_t k = 0; k < candidates->size(); ++k) {
    const auto& x = (*candidates)[k];
    if (k + 1 < candidates->size() && !trace_included(x, (*candidates)[k + 1], bits, budget)) {
      res.reason = "candidate filtration is not increasing at " + std::to_string(k);
      return res;
    }
    if (!trace_included(x, set, bits, budget)) {
      res.reason = "candidate " + std::to_string(k) + " is not contained in the set";
      return res;
    }
    Interval c = content(x);
    res.contents.push_back(c);
    if (!(c.hi < s)) {
      res.reason = "candidate " + std::to_string(k) + " has content " + to_string(c.hi) + " >= s";
      return res;
    }
  }
  res.ok = true;
  res.sets = *candidates;
  res.reason = traces_equal(candidates->back(), set, bits, budget)
                   ? "filtration exhausts the set at depth " + std::to_string(depth)
                   : "filtration verified; union reaches the set only in the limit";
  return res;
}

}  // namespace cantordim
