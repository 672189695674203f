// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "../support/battery.hpp"
#include "../support/oracles.hpp"
#include "cantordim/cantordim.hpp"
#include "cantordim_cli/cli.hpp"

using namespace cantordim;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

nlohmann::json run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"cantordim"};
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) throw std::runtime_error("cli exit " + std::to_string(code) + ": " + err.str());
  return nlohmann::json::parse(out.str());
}

Outcome normalization() {
  Outcome o;
  auto t0 = Clock::now();
  for (int m = 0; m <= 8; ++m) {
    auto j = run_cli({"measure", "--set", R"({"kind":"full"})", "--gauge", "r^1", "--scale",
                      std::to_string(m), "--depth", "16"});
    if (j["lower"] != "1" || j["upper"] != "1") {
      o.fail("m=" + std::to_string(m) + " gave [" + j["lower"].get<std::string>() + ", " +
             j["upper"].get<std::string>() + "]");
    }
  }
  double t = seconds_since(t0);
  if (t >= 1.0) o.fail("runtime " + std::to_string(t) + " s");
  if (o.passed) o.detail = "lower = upper = 1 for m = 0..8 in " + std::to_string(t) + " s";
  return o;
}

Outcome ci_vanishing() {
  Outcome o;
  TreeSet c = TreeSet::ci(IndexSpec::evens());
  auto h = DyadicHFn::power(1);
  for (std::size_t n = 2; n <= 16; ++n) {
    auto b = hausdorff_measure_delta(c, h, n, n);
    std::size_t n_cap_I = (n + 1) / 2;  // |{0, 2, 4, ...} ∩ [0, n)|
    if (b.upper != pow2(-static_cast<long>(n_cap_I))) o.fail("n=" + std::to_string(n) + " upper " + to_string(b.upper));
    if (b.upper > pow2(-static_cast<long>(n / 2))) o.fail("n=" + std::to_string(n) + " above 2^-floor(n/2)");
  }
  if (o.passed) o.detail = "upper = 2^-|n ∩ I| exactly for n = 2..16";
  return o;
}

Outcome mass_certificate() {
  Outcome o;
  auto t0 = Clock::now();
  auto h = DyadicHFn::power(Rational(1, 2));
  IndexSpec I = sparse_I_builder(h, 64);
  TreeSet c = TreeSet::ci(I);
  auto cert = mass_lower_certificate(c, h, UniformSplit{}, 64);
  if (!cert.ok) o.fail("certificate failed: " + cert.reason);
  if (cert.value < 1) o.fail("certificate " + to_string(cert.value) + " < 1");
  for (std::size_t m = 0; m <= 64; ++m) {
    auto b = hausdorff_measure_delta(c, h, m, 64);
    if (b.upper < cert.value) o.fail("m=" + std::to_string(m) + " upper below certificate");
  }
  double t = seconds_since(t0);
  if (t >= 10.0) o.fail("runtime " + std::to_string(t) + " s");
  if (o.passed) o.detail = "certificate " + to_string(cert.value) + ", all 65 upper bounds above it, " + std::to_string(t) + " s";
  return o;
}

Outcome ci_dimension() {
  Outcome o;
  TreeSet ce = TreeSet::ci(IndexSpec::evens());
  auto counts = trace_counts(ce, 64);
  for (std::size_t n = 1; n <= 64; ++n) {
    // independent count: N = 2^(number of odd indices below n)
    Integer expect = pow2_int(static_cast<unsigned long>(n / 2));
    if (counts[n] != expect) o.fail("N(2^-" + std::to_string(n) + ") mismatch");
    double r = log2_double(counts[n]) / static_cast<double>(n);
    if (std::abs(r - 0.5) > 1.0 / static_cast<double>(n)) o.fail("ratio off at n=" + std::to_string(n));
  }
  auto dens = ci_density(IndexSpec::evens());
  if (dens.lower != Rational(1, 2) || dens.upper != Rational(1, 2)) o.fail("density oracle not 1/2");
  auto est = box_dimensions(ce, 1, 64);
  if (!est.closed_form || est.closed_form->first != Rational(1, 2) || est.closed_form->second != Rational(1, 2)) {
    o.fail("closed form for C_evens is not 1/2");
  }
  IndexSpec blk = IndexSpec::log_blocks(Word("10"));
  TreeSet cb = TreeSet::ci(blk);
  auto eb = box_dimensions(cb, 1, 64);
  auto cnt = trace_counts(cb, 64);
  std::size_t free = 0;
  for (std::size_t n = 1; n <= 64; ++n) {
    std::size_t i = n - 1;
    bool in_I = i > 0 && (std::bit_width(i) - 1) % 2 == 0;
    if (!in_I) ++free;
    if (cnt[n] != pow2_int(static_cast<unsigned long>(free))) o.fail("block-I count mismatch at n=" + std::to_string(n));
  }
  if (std::abs(eb.lower - 1.0 / 3) > 0.05 || std::abs(eb.upper - 2.0 / 3) > 0.05) {
    o.fail("block-I tail estimates [" + std::to_string(eb.lower) + ", " + std::to_string(eb.upper) + "]");
  }
  auto bd = ci_density(blk);
  if (bd.lower != Rational(1, 3) || bd.upper != Rational(2, 3)) o.fail("block-I density limits not [1/3, 2/3]");
  if (o.passed) {
    o.detail = "C_evens within 1/n of 1/2; block I tail [" + std::to_string(eb.lower) + ", " +
               std::to_string(eb.upper) + "], limits [1/3, 2/3]";
  }
  return o;
}

Outcome sumset_algebra() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> specs = {
      {"", "10"}, {"", "01"}, {"", "100"}, {"", "110"}, {"1", "0"},
      {"", "1"},  {"01", "1"}, {"", "1010"}, {"", "0110"}, {"", "111000"}};
  for (std::size_t a = 0; a < specs.size(); ++a) {
    std::size_t b = (a * 3 + 1) % specs.size();
    PeriodicBits pa(Word(specs[a].first), Word(specs[a].second));
    PeriodicBits pb(Word(specs[b].first), Word(specs[b].second));
    auto in_a = [pa](std::size_t i) { return pa.at(i) != 0; };
    auto in_b = [pb](std::size_t i) { return pb.at(i) != 0; };
    TreeSet sum = TreeSet::sumset(TreeSet::ci(IndexSpec::periodic(pa)), TreeSet::ci(IndexSpec::periodic(pb)));
    auto brute = oracle::sumset(oracle::ci(in_a), oracle::ci(in_b))(8);
    auto meet = oracle::ci([&](std::size_t i) { return in_a(i) && in_b(i); })(8);
    if (oracle::library_trace(sum, 8) != brute) o.fail("C_I + C_J trace differs from XOR oracle, pair " + std::to_string(a));
    if (brute != meet) o.fail("XOR oracle differs from C_{I∩J}, pair " + std::to_string(a));
  }
  for (auto& e : battery::sets()) {
    TreeSet s = TreeSet::sumset(e.set, TreeSet::zero_point());
    auto t = oracle::library_trace(s, 8);
    if (t != e.trace(8) || t != oracle::library_trace(e.set, 8)) o.fail("A + {0} != A for " + e.name);
  }
  if (o.passed) o.detail = "10 periodic pairs and " + std::to_string(battery::sets().size()) + " battery sets exact at depth 8";
  return o;
}

Outcome product_counting() {
  Outcome o;
  auto sets = battery::sets();
  std::size_t pairs = 0;
  for (auto& a : sets) {
    for (auto& b : sets) {
      auto ca = trace_counts(a.set, 12), cb = trace_counts(b.set, 12);
      auto cp = trace_counts(TreeSet::product(a.set, b.set), 24);
      for (std::size_t n = 0; n <= 12; ++n) {
        if (cp[2 * n] != ca[n] * cb[n]) o.fail(a.name + " x " + b.name + " at n=" + std::to_string(n));
      }
      ++pairs;
    }
  }
  if (o.passed) o.detail = std::to_string(pairs) + " pairs exact for n <= 12";
  return o;
}

Outcome dp_vs_bruteforce() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t len = 1 + rng() % 5;
    std::size_t count = 1 + rng() % std::min<std::size_t>(8, std::size_t{1} << len);
    std::set<std::string> ws;
    while (ws.size() < count) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i) w += (rng() & 1) ? '1' : '0';
      ws.insert(w);
    }
    bool cyl = trial % 3 == 2;
    std::size_t D = cyl ? len : std::min<std::size_t>(6, len + rng() % 3);
    std::size_t m = rng() % (D + 1);
    std::vector<Word> words;
    for (auto& w : ws) words.emplace_back(w);
    TreeSet s = TreeSet::explicit_words(words, cyl ? ExplicitTail::Cylinder : ExplicitTail::Point);
    std::vector<Rational> table;
    if (trial % 2 == 0) {
      for (std::size_t k = 0; k <= 8; ++k) table.push_back(pow2(-static_cast<long>(k)));
    } else {
      Rational v(1);
      for (std::size_t k = 0; k <= 8; ++k) {
        table.push_back(v);
        v = v * Rational(static_cast<long>(1 + rng() % 3), 4);
      }
    }
    auto h = DyadicHFn::from_exact(table);
    auto bound = hausdorff_measure_delta(s, h, m, D);
    auto brute = oracle::min_cover_cost(oracle::explicit_words(std::vector<std::string>(ws.begin(), ws.end()), cyl)(D),
                                        D, m, [&](std::size_t k) { return table[k]; });
    if (bound.upper != brute) {
      o.fail("trial " + std::to_string(trial) + ": DP " + to_string(bound.upper) + " vs brute force " + to_string(brute));
    }
  }
  double t = seconds_since(t0);
  if (t >= 30.0) o.fail("runtime " + std::to_string(t) + " s");
  if (o.passed) o.detail = "25 random sets agree exactly, " + std::to_string(t) + " s";
  return o;
}

Outcome chain_ordering() {
  Outcome o;
  std::size_t runs = 0;
  for (auto& e : battery::with_products()) {
    for (const Rational& s : {Rational(1), Rational(1, 2)}) {
      auto h = DyadicHFn::power(s);
      auto rep = chain_check(e.set, h, 0, 10);
      ++runs;
      if (!rep.passed()) {
        for (auto& c : rep.checks) {
          if (!c.passed) o.fail(e.name + ": " + c.name + " (" + c.detail + ")");
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(runs) + " (set, gauge) pairs ordered";
  return o;
}

Outcome meshelah() {
  Outcome o;
  auto t0 = Clock::now();
  auto h = DyadicHFn::power(1);
  BlockPartition f = me_fbuilder(h, 13);
  for (std::size_t k = 0; k <= 12; ++k) {
    // 2^f(k) 2^-f(k+1) <= 2^-k, i.e. f(k+1) - f(k) >= k
    if (f(k + 1) < f(k) + k) o.fail("inequality fails at k=" + std::to_string(k));
  }
  std::vector<std::size_t> g;
  for (std::size_t n = 0; 2 * n <= 12; ++n) g.push_back(f(2 * n));
  ShelahMWitness w{f, g, PeriodicBits(Word(), Word("0"))};
  Cover cover = me_cover(w, 6);
  auto sums = gamma_grouped_sum(cover, h);
  Rational partial(0);
  for (auto& s : sums.per_group) {
    partial += s;
    if (partial > 2) o.fail("partial sum " + to_string(partial) + " exceeds 2");
  }
  TreeSet zero = TreeSet::zero_point();
  TreeSet other = TreeSet::point(PeriodicBits(Word("1"), Word("0")));
  for (const auto& pt : {PeriodicBits(Word(), Word("0")), PeriodicBits(Word("1"), Word("0"))}) {
    auto v = shelahM_check(w, pt.prefix(g[3]), 0, 2);
    if (!v.holds()) o.fail("a point of the set fails the ShelahM predicate");
  }
  auto verdict = verify_gamma_groupable(TreeSet::union_of({zero, other}), cover, 2, f(6));
  if (!verdict.holds()) o.fail("gamma-groupable verification failed: " + verdict.note);
  double t = seconds_since(t0);
  if (t >= 5.0) o.fail("runtime " + std::to_string(t) + " s");
  if (o.passed) {
    o.detail = "f = " + [&] {
      std::string s;
      for (auto v : f.values()) s += (s.empty() ? "" : ",") + std::to_string(v);
      return s;
    }() + "; cover sum " + to_string(sums.total) + ", j0 = " + std::to_string(*verdict.j0);
  }
  return o;
}

Outcome shelahN_tprime() {
  Outcome o;
  auto h = DyadicHFn::power(1);
  Growth F = nadd_growth_from(h);
  BlockPartition f = nadd_fbuilder(F, 5);
  ShelahNWitness w{f, {}};
  for (std::size_t n = 0; n < 5; ++n) {
    if (n == 0) w.H.push_back({});
    else w.H.push_back({Word(std::string(f.block_length(n), n % 2 ? '1' : '0'))});
  }
  auto rep = nadd_box_check(w, F, h, f(5));
  if (!rep.passed) o.fail("nadd box check failed " + rep.note);
  for (auto& r : rep.rows) {
    if (r.value > 1) o.fail("N h > 1 at n=" + std::to_string(r.n) + ", i=" + std::to_string(r.i));
  }
  Growth G = tprime_growth_from(h);
  Growth one = [](std::size_t) { return Integer(1); };
  BlockPartition ft = tprime_fbuilder(G, one, 12);
  TPrimeWitness tw;
  tw.f = ft;
  for (std::size_t n = 0; n < 12; n += 2) {
    tw.I.push_back(n);
    tw.H[n] = {Word(std::string(ft.block_length(n), '0'))};
  }
  tw.g.assign(12, Integer(1));
  auto trep = tprime_lbox_check(tw, G, h, ft(12));
  if (!trep.passed || trep.window_value > 1) o.fail("T' liminf window " + to_string(trep.window_value));
  if (o.passed) {
    o.detail = std::to_string(rep.rows.size()) + " box rows, max N h = " + to_string(rep.window_value) +
               "; T' liminf window " + to_string(trep.window_value);
  }
  return o;
}

Outcome einc_equivalence() {
  Outcome o;
  std::mt19937 rng(7);
  std::size_t instances = 0, holding = 0;
  while (instances < 60) {
    // random f with f(last) <= 10 and g with at least two f∘g blocks
    std::vector<std::size_t> f{0};
    while (f.back() < 10 && f.size() < 7) {
      std::size_t step = 1 + rng() % 3;
      if (f.back() + step > 10) break;
      f.push_back(f.back() + step);
    }
    std::size_t blocks = f.size() - 1;
    if (blocks < 2) continue;
    std::vector<std::size_t> g{0};
    while (g.back() < blocks) g.push_back(std::min(blocks, g.back() + 1 + rng() % 2));
    if (g.size() < 3) continue;
    std::vector<std::set<std::string>> Fs(blocks), Gs(g.size() - 1);
    std::vector<std::vector<Word>> Fw(blocks), Gw(g.size() - 1);
    for (std::size_t k = 0; k < blocks; ++k) {
      std::size_t len = f[k + 1] - f[k];
      for (auto& w : oracle::all_words(len)) {
        if (rng() % 3 == 0) Fs[k].insert(w);
      }
      std::size_t cap = (std::size_t{1} << f[k + 1]) >> std::min<std::size_t>(k, 63);
      while (Fs[k].size() > cap) Fs[k].erase(Fs[k].begin());
      for (auto& w : Fs[k]) Fw[k].emplace_back(w);
    }
    for (std::size_t n = 0; n + 1 < g.size(); ++n) {
      std::size_t a = f[g[n]], b = f[g[n + 1]];
      auto words = oracle::all_words(b - a);
      int density = static_cast<int>(rng() % 4);
      for (auto& w : words) {
        if (static_cast<int>(rng() % 4) <= density) Gs[n].insert(w);
      }
      std::size_t cap = (std::size_t{1} << b) >> std::min<std::size_t>(n, 63);
      while (Gs[n].size() > cap) Gs[n].erase(Gs[n].begin());
      for (auto& w : Gs[n]) Gw[n].emplace_back(w);
    }
    BlockPartition fp(f);
    BlockFamily F(fp, Fw), G(fp.compose(g), Gw);
    const std::size_t N = g.size() - 2;
    auto v = einc_inclusion(fp, g, F, G, N);
    std::optional<std::size_t> last_bad;
    for (std::size_t n = 0; n <= N; ++n) {
      if (!oracle::window_inclusion(f, g, Fs, Gs, n, f.back())) last_bad = n;
    }
    bool oracle_holds = !last_bad || *last_bad < N;
    std::optional<std::size_t> oracle_n0;
    if (oracle_holds) oracle_n0 = last_bad ? *last_bad + 1 : 0;
    if (v.verdict.holds() != oracle_holds || v.verdict.n0 != oracle_n0 || v.verdict.failure_index != last_bad) {
      o.fail("instance " + std::to_string(instances) + " disagrees with the exhaustive oracle");
    }
    if (oracle_holds) ++holding;
    ++instances;
  }
  if (holding == 0 || holding == instances) o.fail("random instances all share one verdict");
  if (o.passed) {
    o.detail = std::to_string(instances) + " random instances agree (" + std::to_string(holding) + " hold, " +
               std::to_string(instances - holding) + " fail)";
  }
  return o;
}

Outcome diagonal_merge() {
  Outcome o;
  const std::size_t J = 14;
  std::vector<Rational> eps;
  for (std::size_t n = 0; n <= J + 2; ++n) eps.push_back(pow2(-static_cast<long>(n)));
  std::vector<TreeSet> sets = {
      TreeSet::zero_point(), TreeSet::point(PeriodicBits(Word(), Word("01"))),
      TreeSet::explicit_words({Word("110"), Word("111")}, ExplicitTail::Point)};
  std::vector<DnullWitness> ws;
  for (auto& s : sets) ws.push_back(build_combDnull_witness(Filtration{s}, eps, J));
  DnullWitness merged = merge_diagonal(ws, J);
  TreeSet all = TreeSet::union_of(sets);
  SizeBound sq = [](std::size_t n) { return Integer(static_cast<unsigned long>(n * n)); };
  auto v = verify_combDnull_witness(all, merged, sq, J, J);
  if (!v.holds()) o.fail("merged witness fails: " + v.note);
  for (std::size_t n : merged.I) {
    if (merged.families.at(n).size() > n * n) o.fail("group at " + std::to_string(n) + " exceeds n^2");
  }
  for (std::size_t k = 0; k < ws.size(); ++k) {
    SizeBound id = [](std::size_t n) { return Integer(static_cast<unsigned long>(n)); };
    if (!verify_combDnull_witness(sets[k], ws[k], id, J, J).holds()) o.fail("input witness " + std::to_string(k) + " fails");
  }
  if (o.passed) o.detail = "|I| = " + std::to_string(merged.I.size()) + ", verifier holds from n = " + std::to_string(*v.j0);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"normalization of H^1 on the full cube", normalization},
      {"C_I vanishing measure bound", ci_vanishing},
      {"mass certificate for the sparse C_I", mass_certificate},
      {"dimension of C_I", ci_dimension},
      {"sumset algebra", sumset_algebra},
      {"product counting", product_counting},
      {"DP against brute-force covers", dp_vs_bruteforce},
      {"chain ordering", chain_ordering},
      {"MeShelah pipeline", meshelah},
      {"ShelahN and T' pipelines", shelahN_tprime},
      {"Einc equivalence", einc_equivalence},
      {"diagonal merge", diagonal_merge},
  };
  int failures = 0;
  int idx = 1;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail = std::string("exception: ") + e.what();
    }
    std::cout << (out.passed ? "PASS" : "FAIL") << "  " << idx << ". " << c.title << ": " << out.detail << '\n';
    if (!out.passed) ++failures;
    ++idx;
  }
  return failures;
}
