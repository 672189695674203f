#include "cantordim/hfun.hpp"

#include <algorithm>

#include "cantordim/errors.hpp"

namespace cantordim {

namespace {

Rational rat(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Least m >= 1 with (1 + 1/m)^t <= 2^s, i.e. from where 2^(-ms) m^t is nonincreasing.
std::size_t monotone_start(const Rational& s, const Rational& t) {
  const unsigned long a = t.get_num().get_ui();
  const unsigned long b = t.get_den().get_ui();
  const unsigned long c = s.get_num().get_ui();
  const unsigned long d = s.get_den().get_ui();
  // ((m+1)/m)^(t) <= 2^s  <=>  (m+1)^(a d) * 2^(-c b) ... compared in integers
  auto ok = [&](std::size_t m) {
    Integer lhs = ipow(Integer(static_cast<unsigned long>(m + 1)), a * d);
    Integer rhs = ipow(Integer(static_cast<unsigned long>(m)), a * d) * pow2_int(c * b);
    return lhs <= rhs;
  };
  std::size_t hi = 1;
  while (!ok(hi)) {
    hi *= 2;
    if (hi > (std::size_t{1} << 24)) throw InputError("power-log gauge is monotone too late");
  }
  std::size_t lo = hi / 2 + 1;
  if (hi == 1) return 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid + 1;
  }
  return hi;
}

LimitVerdict verdict(VerdictStatus st, std::size_t depth, bool exact, std::string note) {
  LimitVerdict v;
  v.status = st;
  v.depth = depth;
  v.exact = exact;
  v.note = std::move(note);
  return v;
}

Interval ratio(const Interval& num, const Interval& den) {
  return Interval(Rational(num.lo / den.hi), Rational(num.hi / den.lo));
}

}  // namespace

DyadicHFn DyadicHFn::power(const Rational& s, std::size_t n_max, unsigned bits) {
  return power_log(s, Rational(0), n_max, bits);
}

DyadicHFn DyadicHFn::from_symbolic(const SymbolicGauge& g, std::size_t n_max, unsigned bits) {
  return power_log(g.s, g.t, n_max, bits);
}

DyadicHFn DyadicHFn::power_log(const Rational& s, const Rational& t, std::size_t n_max,
                               unsigned bits) {
  if (sgn(s) < 0) throw InputError("gauge exponent must be nonnegative");
  if (sgn(s) == 0 && sgn(t) > 0) throw InputError("(log 1/r)^t with t > 0 is not nondecreasing");
  if (n_max < 1) n_max = 1;
  DyadicHFn h;
  h.symbolic_ = SymbolicGauge{s, t};
  h.bits_ = bits;
  h.monotone_from_ = (sgn(t) > 0) ? monotone_start(s, t) : 0;
  n_max = std::max(n_max, h.monotone_from_);
  h.values_.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) h.values_[n] = h.raw(n);
  if (h.monotone_from_ > 0) {
    for (std::size_t n = h.monotone_from_; n-- > 0;) {
      h.values_[n] = max(h.values_[n], h.values_[n + 1]);
    }
  }
  return h;
}

Interval DyadicHFn::raw(std::size_t n) const {
  const auto& g = *symbolic_;
  if (n == 0) {
    if (g.pure_power()) return Interval(Rational(1));
    n = 1;
  }
  Interval p = pow2_interval(Rational(-rat(n) * g.s), bits_);
  if (g.pure_power() || n == 1) return p;
  return p * pow_interval(rat(n), g.t, bits_);
}

DyadicHFn DyadicHFn::from_table(std::vector<Interval> values, unsigned bits) {
  if (values.empty()) throw InputError("empty gauge table");
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (sgn(values[n].lo) <= 0) {
      throw InputError("gauge value at n=" + std::to_string(n) + " is not positive");
    }
    if (n > 0 && (values[n].lo > values[n - 1].lo || values[n].hi > values[n - 1].hi)) {
      throw InputError("gauge table increases at n=" + std::to_string(n));
    }
  }
  DyadicHFn h;
  h.values_ = std::move(values);
  h.bits_ = bits;
  return h;
}

DyadicHFn DyadicHFn::from_exact(const std::vector<Rational>& values) {
  std::vector<Interval> iv(values.begin(), values.end());
  return from_table(std::move(iv));
}

Interval DyadicHFn::at(std::size_t n) const {
  if (n < values_.size()) return values_[n];
  if (!symbolic_) throw DepthExceededError(n, n_max());
  return raw(n);
}

Interval DyadicHFn::at(const LocalDiameter& d) const {
  if (d.is_point()) return Interval(Rational(0));
  return at(d.exponent);
}

bool DyadicHFn::vanishing() const {
  if (symbolic_) return sgn(symbolic_->s) > 0 || sgn(symbolic_->t) < 0;
  return values_.back().hi < values_[n_max() / 2].lo;
}

std::string DyadicHFn::describe() const {
  if (symbolic_) {
    std::string d = "r^" + to_string(symbolic_->s);
    if (!symbolic_->pure_power()) d += " (log2 1/r)^" + to_string(symbolic_->t);
    return d;
  }
  return "table[0.." + std::to_string(n_max()) + "]";
}

std::string to_string(VerdictStatus v) {
  switch (v) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Fails: return "fails";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

LimitVerdict precede(const DyadicHFn& g, const DyadicHFn& h, std::size_t depth,
                     const Rational& tol) {
  if (g.symbolic() && h.symbolic()) {
    const auto& a = *g.symbolic();
    const auto& b = *h.symbolic();
    bool holds = b.s > a.s || (b.s == a.s && b.t < a.t);
    auto v = verdict(holds ? VerdictStatus::Holds : VerdictStatus::Fails, depth, true,
                     "symbolic comparison of exponents");
    if (!holds) v.index = 0;
    return v;
  }
  if (!g.defined_to(depth) || !h.defined_to(depth)) {
    throw DepthExceededError(depth, std::min(g.defined_to(depth) ? depth : g.n_max(),
                                             h.defined_to(depth) ? depth : h.n_max()));
  }
  if (depth < 2) throw InputError("precede needs depth >= 2");
  const std::size_t w0 = depth / 2;
  std::vector<Interval> q(depth + 1);
  for (std::size_t n = 0; n <= depth; ++n) q[n] = ratio(h.at(n), g.at(n));

  bool trending_down = true;
  for (std::size_t i = w0; i < depth; ++i) trending_down = trending_down && q[i + 1].hi <= q[i].hi;
  if (trending_down && q[depth].hi < q[w0].lo && q[depth].hi <= tol) {
    return verdict(VerdictStatus::Holds, depth, false, "ratio decreasing below tolerance on window");
  }
  const Rational big = 1 / tol;
  for (std::size_t n = w0; n <= depth; ++n) {
    if (q[n].lo > big) {
      auto v = verdict(VerdictStatus::Fails, depth, false, "ratio exceeds 1/tol");
      v.index = n;
      return v;
    }
  }
  std::size_t n0 = depth;
  while (n0 > 0 && q[n0].lo >= q[n0 - 1].lo) --n0;
  if (n0 <= w0) {
    auto v = verdict(VerdictStatus::Fails, depth, false, "ratio nondecreasing through depth");
    v.index = n0;
    return v;
  }
  return verdict(VerdictStatus::Inconclusive, depth, false, "ratio neither settles nor grows");
}

DyadicHFn diagonal_dominate(const std::vector<DyadicHFn>& hs) {
  if (hs.empty()) throw InputError("diagonal domination of an empty list");
  for (const auto& h : hs) {
    if (!h.vanishing()) throw InputError("diagonal domination needs vanishing gauges");
  }
  bool all_symbolic = std::all_of(hs.begin(), hs.end(), [](const auto& h) {
    return h.symbolic().has_value();
  });
  std::size_t n_max = hs.front().n_max();
  for (const auto& h : hs) n_max = std::min(n_max, h.n_max());
  if (all_symbolic) {
    Rational s = hs.front().symbolic()->s;
    for (const auto& h : hs) s = std::max(s, h.symbolic()->s);
    std::optional<Rational> t;
    for (const auto& h : hs) {
      if (h.symbolic()->s == s && (!t || h.symbolic()->t < *t)) t = h.symbolic()->t;
    }
    return DyadicHFn::power_log(s, *t - 1, n_max, hs.front().precision_bits());
  }
  std::vector<Interval> out(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    std::size_t last = std::min(m, hs.size() - 1);
    Interval v = hs[0].at(m);
    for (std::size_t i = 1; i <= last; ++i) v = min(v, hs[i].at(m));
    out[m] = scale(v, pow2(-floor_log2(Rational(static_cast<unsigned long>(m + 1)))));
  }
  return DyadicHFn::from_table(std::move(out), hs.front().precision_bits());
}

DyadicHFn compose(const DyadicHFn& h, const DyadicHFn& g) {
  if (h.symbolic() && g.symbolic() && h.symbolic()->pure_power() && g.symbolic()->pure_power()) {
    return DyadicHFn::power(h.symbolic()->s * g.symbolic()->s, g.n_max(), h.precision_bits());
  }
  std::vector<Interval> out;
  for (std::size_t n = 0; n <= g.n_max(); ++n) {
    Interval gn = g.at(n);
    long k_lo = std::max(0L, -floor_log2(gn.lo));
    long k_hi = std::max(0L, -ceil_log2(gn.hi));
    if (!h.defined_to(static_cast<std::size_t>(k_lo))) break;
    out.emplace_back(h.at(static_cast<std::size_t>(k_lo)).lo,
                     h.at(static_cast<std::size_t>(k_hi)).hi);
  }
  if (out.empty()) throw DepthExceededError(0, h.n_max());
  return DyadicHFn::from_table(std::move(out), h.precision_bits());
}

DyadicHFn multiply(const DyadicHFn& h, const DyadicHFn& g) {
  if (h.symbolic() && g.symbolic()) {
    return DyadicHFn::power_log(h.symbolic()->s + g.symbolic()->s,
                                h.symbolic()->t + g.symbolic()->t,
                                std::min(h.n_max(), g.n_max()), h.precision_bits());
  }
  std::size_t n_max = std::min(h.defined_to(g.n_max()) ? g.n_max() : h.n_max(),
                               g.defined_to(h.n_max()) ? h.n_max() : g.n_max());
  std::vector<Interval> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out[n] = h.at(n) * g.at(n);
  return DyadicHFn::from_table(std::move(out), h.precision_bits());
}

DyadicHFn grid_inverse(const DyadicHFn& g) {
  if (g.symbolic() && g.symbolic()->pure_power()) {
    if (sgn(g.symbolic()->s) == 0) throw InputError("constant gauge has no inverse");
    return DyadicHFn::power(1 / g.symbolic()->s, g.n_max(), g.precision_bits());
  }
  const auto& tab = g.table();
  for (std::size_t k = 1; k < tab.size(); ++k) {
    if (!(tab[k].hi < tab[k - 1].lo)) {
      throw InputError("grid inverse needs a strictly decreasing gauge (fails at n=" +
                       std::to_string(k) + ")");
    }
  }
  std::vector<Interval> out;
  for (std::size_t n = 0;; ++n) {
    Rational target = pow2(-static_cast<long>(n));
    // r = g^-1(2^-n) lies in [2^-k', 2^-k] where g_k >= 2^-n > g_k'.
    std::optional<std::size_t> k_up, k_down;
    for (std::size_t k = 0; k < tab.size(); ++k) {
      if (tab[k].lo >= target) k_up = k;
      if (tab[k].hi < target) {
        k_down = k;
        break;
      }
    }
    if (!k_down) break;
    if (k_up && tab[*k_up].exact() && tab[*k_up].lo == target) {
      out.emplace_back(pow2(-static_cast<long>(*k_up)));
    } else {
      Rational hi = k_up ? pow2(-static_cast<long>(*k_up)) : Rational(1);
      Rational lo = std::min(hi, pow2(-static_cast<long>(*k_down)));
      out.emplace_back(lo, hi);
    }
  }
  if (out.empty()) throw InputError("gauge table too short to invert");
  return DyadicHFn::from_table(std::move(out), g.precision_bits());
}

LimitVerdict finite_order(const DyadicHFn& h, std::size_t depth) {
  if (h.symbolic()) {
    const auto& g = *h.symbolic();
    auto v = verdict(VerdictStatus::Holds, depth, true, "symbolic gauges are doubling");
    Rational e = g.s + (sgn(g.t) < 0 ? Rational(-g.t) : Rational(0));
    v.bound = pow2_interval(e, h.precision_bits()).hi;
    return v;
  }
  if (!h.defined_to(depth)) throw DepthExceededError(depth, h.n_max());
  if (depth < 2) throw InputError("finite order needs depth >= 2");
  const std::size_t w0 = depth / 2;
  std::vector<Interval> q(depth + 1);
  for (std::size_t n = 1; n <= depth; ++n) q[n] = ratio(h.at(n - 1), h.at(n));
  Rational b1 = q[1].hi, b2 = q[w0 + 1].hi;
  for (std::size_t n = 1; n <= w0; ++n) b1 = std::max(b1, q[n].hi);
  for (std::size_t n = w0 + 1; n <= depth; ++n) b2 = std::max(b2, q[n].hi);
  if (b2 <= b1 + 1) {
    auto v = verdict(VerdictStatus::Holds, depth, false, "doubling ratio does not grow on window");
    v.bound = std::max(b1, b2);
    return v;
  }
  bool rising = true;
  for (std::size_t n = w0 + 1; n < depth; ++n) rising = rising && q[n + 1].lo >= q[n].lo;
  if (rising && q[depth].lo > 2 * b1) {
    auto v = verdict(VerdictStatus::Fails, depth, false, "doubling ratio grows without bound");
    v.index = depth;
    return v;
  }
  return verdict(VerdictStatus::Inconclusive, depth, false, "doubling ratio unsettled");
}

DyadicHFn hfn_from_epsilons(const std::vector<Rational>& eps) {
  if (eps.empty()) throw InputError("empty epsilon sequence");
  std::vector<long> k(eps.size());
  long k_max = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (sgn(eps[i]) <= 0) throw InputError("epsilons must be positive");
    k[i] = std::max(0L, -floor_log2(eps[i]));
    k_max = std::max(k_max, k[i]);
  }
  const std::size_t n_max = std::max<std::size_t>(kDefaultGridDepth,
                                                  static_cast<std::size_t>(k_max) + 1);
  const std::size_t N = eps.size();
  std::vector<Rational> out(n_max + 1);
  for (std::size_t g = 0; g <= n_max; ++g) {
    Rational v(1, static_cast<unsigned long>(N + 1 + g));
    v.canonicalize();
    for (std::size_t i = 0; i < N; ++i) {
      if (k[i] >= static_cast<long>(g)) {
        Rational w(1, static_cast<unsigned long>(i + 1));
        w.canonicalize();
        v = std::max(v, w);
        break;
      }
    }
    out[g] = v;
  }
  return DyadicHFn::from_exact(out);
}

}  // namespace cantordim
