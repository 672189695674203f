#include "cantordim_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace cantordim::cli {

namespace {

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  return v.dump();
}

json limits(const RunConfig& c) {
  return json{{"depth", c.depth},         {"groups", c.groups}, {"scale", c.scale},
              {"precision_bits", c.precision}, {"budget", c.budget}};
}

Report check_table(const std::vector<CheckLine>& checks) {
  Report r;
  r.columns = {"check", "passed", "detail"};
  for (const auto& c : checks) {
    r.rows.push_back({c.name, c.passed, c.detail});
    if (!c.passed) r.passed = false;
  }
  return r;
}

struct Inputs {
  std::string set, set2, gauge, gauge2, input;
  std::size_t from = 1;
  std::size_t blocks = 12;
  std::size_t g_const = 1;
  std::string criterion = "extension";
  std::string instance;
};

TreeSet need_set(const std::string& arg, const char* flag) {
  if (arg.empty()) throw InputError(std::string("missing ") + flag);
  return parse_set(load_json(arg, flag));
}

DyadicHFn gauge_or(const std::string& arg, const char* fallback, const RunConfig& c) {
  json spec = arg.empty() ? json(fallback) : load_json(arg.front() == 'r' ? "\"" + arg + "\"" : arg, "gauge");
  return parse_gauge(spec, c.precision);
}

// ---------------------------------------------------------------------------------------------

Report cmd_dim(const RunConfig& c, const Inputs& in) {
  TreeSet set = need_set(in.set, "--set");
  const std::size_t lo = std::max<std::size_t>(1, in.from);
  if (lo > c.depth) throw InputError("--from exceeds --depth");
  auto counts = trace_counts(set, c.depth * set.stride(), c.budget);
  auto est = box_dimensions(set, lo, c.depth, c.budget);
  Report r;
  r.columns = {"n", "N", "log2N_over_n"};
  for (std::size_t n = lo; n <= c.depth; ++n) {
    const Integer& N = counts[n * set.stride()];
    r.rows.push_back({n, to_string(N), log2_double(N) / static_cast<double>(n)});
  }
  r.meta["estimate"] = json{{"lower", est.lower}, {"upper", est.upper}, {"window_from", est.window_from}};
  if (est.closed_form) {
    r.meta["closed_form"] = json{{"lower", to_string(est.closed_form->first)},
                                 {"upper", to_string(est.closed_form->second)}};
  }
  return r;
}

Report cmd_measure(const RunConfig& c, const Inputs& in) {
  TreeSet set = need_set(in.set, "--set");
  DyadicHFn h = gauge_or(in.gauge, "r^1", c);
  MeasureOptions opts;
  opts.budget = c.budget;
  MeasureBound b = hausdorff_measure_delta(set, h, c.scale, c.depth, opts);
  Report r;
  r.meta = to_json(b);
  r.columns = {"scale_m", "depth", "lower", "upper"};
  r.rows.push_back({b.scale_m, b.depth, to_string(b.lower), to_string(b.upper)});
  return r;
}

Report verify_ec3(const RunConfig& c, const Inputs& in) {
  DyadicHFn h = gauge_or(in.gauge, "r^1/2", c);
  IndexSpec I = sparse_I_builder(h, c.depth);
  TreeSet set = TreeSet::ci(I);
  MeasureOptions opts;
  opts.budget = c.budget;
  MassCertificate cert = mass_lower_certificate(set, h, UniformSplit{}, c.depth, opts);
  std::vector<CheckLine> checks;
  checks.push_back({"mass certificate >= 1", cert.ok && cert.value >= 1,
                    cert.ok ? to_string(cert.value) : cert.reason});
  bool all = true;
  std::string worst;
  for (std::size_t m = 0; m <= std::min<std::size_t>(c.depth, 64); ++m) {
    auto b = hausdorff_measure_delta(set, h, m, c.depth, opts);
    if (cert.ok && b.upper < cert.value) {
      all = false;
      worst = "m=" + std::to_string(m) + " upper " + to_string(b.upper);
    }
  }
  checks.push_back({"DP upper >= certificate at every scale", all, worst});
  Report r = check_table(checks);
  if (const auto* p = I.as_periodic()) {
    r.meta["I"] = json{{"preperiod", p->preperiod().str()}, {"period", p->period().str()}};
  }
  r.meta["certificate"] = to_string(cert.value);
  r.meta["certificate_exact"] = cert.exact;
  return r;
}

Report verify_howroyd(const RunConfig& c, const Inputs& in) {
  TreeSet a = in.set.empty() ? TreeSet::ci(IndexSpec::evens()) : need_set(in.set, "--set");
  TreeSet b = in.set2.empty() ? TreeSet::ci(IndexSpec::odds()) : need_set(in.set2, "--set2");
  DyadicHFn h = gauge_or(in.gauge, "r^1/2", c);
  DyadicHFn g = gauge_or(in.gauge2, "r^1/2", c);
  MeasureOptions opts;
  opts.budget = c.budget;
  auto rep = product_inequality_check(a, b, h, g, c.scale, c.depth, opts);
  Report r = check_table(rep.checks);
  if (rep.constant_v) r.meta["constant_v"] = to_string(*rep.constant_v);
  if (rep.constant_vi) r.meta["constant_vi"] = to_string(*rep.constant_vi);
  return r;
}

Report verify_chain(const RunConfig& c, const Inputs& in) {
  TreeSet set = need_set(in.set, "--set");
  DyadicHFn h = gauge_or(in.gauge, "r^1", c);
  MeasureOptions opts;
  opts.budget = c.budget;
  auto rep = chain_check(set, h, c.scale, c.depth, std::nullopt, opts);
  Report r = check_table(rep.checks);
  r.meta["hausdorff"] = to_json(rep.hausdorff);
  r.meta["ubox"] = to_json(rep.ubox);
  if (rep.dbox) r.meta["dbox"] = to_json(*rep.dbox);
  return r;
}

Report verdict_report(const CoverVerdict& v) {
  Report r;
  r.meta["verdict"] = to_json(v);
  r.columns = {"status", "j0", "horizon", "depth", "failure_index"};
  auto o = [](const std::optional<std::size_t>& x) { return x ? json(*x) : json(nullptr); };
  r.rows.push_back({to_string(v.status), o(v.j0), v.horizon, v.depth, o(v.failure_index)});
  r.passed = v.holds();
  return r;
}

Report index_report(const IndexVerdict& v) {
  Report r;
  r.meta["verdict"] = to_json(v);
  r.columns = {"n", "passed"};
  for (std::size_t i = 0; i < v.indices.size(); ++i) {
    r.rows.push_back({v.indices[i], static_cast<bool>(v.passed[i])});
  }
  r.passed = v.holds();
  return r;
}

Report verify_cover(const RunConfig& c, const Inputs& in, bool gamma) {
  TreeSet set = need_set(in.set, "--set");
  if (in.input.empty()) throw InputError("missing --input cover file");
  Cover cover = parse_cover(load_json(in.input, "cover"), set.stride());
  auto v = gamma ? verify_gamma_groupable(set, cover, c.groups, c.depth, c.budget)
                 : verify_lambda(set, cover, c.groups, c.depth, c.budget);
  return verdict_report(v);
}

json need_input(const Inputs& in) {
  if (in.input.empty()) throw InputError("missing --input witness file");
  return load_json(in.input, "witness");
}

Report verify_einc(const RunConfig& c, const Inputs& in) {
  json j = need_input(in);
  BlockPartition f = parse_partition(j.at("f"));
  std::vector<std::size_t> g = parse_indices(j.at("g"));
  BlockFamily F(f, parse_word_table(j.at("F")));
  BlockFamily G(f.compose(g), parse_word_table(j.at("G")));
  std::size_t N = j.contains("N") ? j.at("N").get<std::size_t>() : c.groups;
  while (N > 0 && (N + 1 >= g.size() || N >= G.size() || g[N + 1] > F.size())) --N;
  auto crit = in.criterion == "projection" ? InclusionCriterion::Projection : InclusionCriterion::Extension;
  if (in.criterion != "projection" && in.criterion != "extension") {
    throw InputError("--criterion must be extension or projection");
  }
  auto v = einc_inclusion(f, g, F, G, N, crit);
  Report r = index_report(v.verdict);
  if (v.first_failure) {
    r.meta["first_failure"] = json{{"n", v.first_failure->first}, {"k", v.first_failure->second}};
  }
  r.meta["criterion"] = in.criterion;
  return r;
}

Report verify_shelahM(const RunConfig& c, const Inputs& in) {
  json j = need_input(in);
  ShelahMWitness w = parse_shelahM(j);
  if (w.g.size() < 2) throw InputError("witness: g needs at least two values");
  std::size_t hi = std::min(c.groups, w.g.size() - 2);
  while (hi > 0 && w.f.values().back() < w.g[hi + 1]) --hi;
  Word x = parse_prefix(j.at("x"), w.g[hi + 1]);
  return index_report(shelahM_check(w, x, 0, hi));
}

Report verify_shelahN(const RunConfig& c, const Inputs& in) {
  json j = need_input(in);
  ShelahNWitness w = parse_shelahN(j);
  if (w.H.empty()) throw InputError("witness: H is empty");
  std::size_t hi = std::min(c.groups, w.H.size() - 1);
  Word x = parse_prefix(j.at("x"), w.f(hi + 1));
  return index_report(shelahN_check(w, x, 0, hi));
}

Report verify_tprime(const RunConfig& c, const Inputs& in) {
  json j = need_input(in);
  TPrimeWitness w = parse_tprime(j);
  std::size_t hi = 0;
  for (std::size_t n : w.I) {
    if (n <= c.groups && n < w.f.blocks()) hi = n;
  }
  Word x = parse_prefix(j.at("x"), w.f(hi + 1));
  return index_report(tprime_check(w, x, 0, hi));
}

Report cmd_verify(const RunConfig& c, const Inputs& in) {
  const std::string& i = in.instance;
  if (i == "EC3") return verify_ec3(c, in);
  if (i == "howroyd-i") return verify_howroyd(c, in);
  if (i == "chain") return verify_chain(c, in);
  if (i == "lambda") return verify_cover(c, in, false);
  if (i == "gamma") return verify_cover(c, in, true);
  if (i == "einc") return verify_einc(c, in);
  if (i == "shelahM") return verify_shelahM(c, in);
  if (i == "shelahN") return verify_shelahN(c, in);
  if (i == "tprime") return verify_tprime(c, in);
  throw InputError("unknown instance '" + i + "'");
}

Report cover_report(const Cover& cover, const DyadicHFn& h) {
  Report r;
  r.meta["cover"] = to_json(cover);
  r.meta["cost"] = to_string(cover_cost(cover, h));
  r.columns = {"cyl", "group"};
  for (std::size_t i = 0; i < cover.elements.size(); ++i) {
    r.rows.push_back({cover.elements[i].str(), cover.grouped() ? json(cover.group[i]) : json(nullptr)});
  }
  return r;
}

Report cmd_cover_extract(const RunConfig& c, const Inputs& in) {
  TreeSet set = need_set(in.set, "--set");
  DyadicHFn h = gauge_or(in.gauge, "r^1", c);
  MeasureOptions opts;
  opts.budget = c.budget;
  return cover_report(extract_optimal_cover(set, h, c.scale, c.depth, opts), h);
}

Report cmd_cover_gamma(const RunConfig& c, const Inputs& in) {
  TreeSet set = need_set(in.set, "--set");
  DyadicHFn h = gauge_or(in.gauge, "r^1", c);
  MeasureOptions opts;
  opts.budget = c.budget;
  Cover cover = build_gamma_groupable(Filtration{set}, h, c.groups + 1, c.depth, opts);
  Report r = cover_report(cover, h);
  auto v = verify_gamma_groupable(set, cover, c.groups, c.depth, c.budget);
  r.meta["verdict"] = to_json(v);
  r.passed = v.holds();
  return r;
}

Report fbuilder_report(const BlockPartition& f, const std::function<json(std::size_t)>& row,
                       std::vector<std::string> columns) {
  Report r;
  r.meta["f"] = to_json(f);
  r.columns = std::move(columns);
  for (std::size_t k = 0; k < f.blocks(); ++k) {
    json cells = row(k);
    std::vector<json> v(cells.begin(), cells.end());
    if (!v.back().get<bool>()) r.passed = false;
    r.rows.push_back(std::move(v));
  }
  return r;
}

Report cmd_witness_me(const RunConfig& c, const Inputs& in) {
  DyadicHFn h = gauge_or(in.gauge, "r^1", c);
  BlockPartition f = me_fbuilder(h, in.blocks);
  return fbuilder_report(
      f,
      [&](std::size_t k) {
        Rational lhs = pow2(static_cast<long>(f(k))) * h.at(f(k + 1)).hi;
        Rational rhs = pow2(-static_cast<long>(k));
        return json::array({k, f(k), f(k + 1), to_string(lhs), to_string(rhs), lhs <= rhs});
      },
      {"k", "f_k", "f_k1", "lhs", "bound", "passed"});
}

Report cmd_witness_nadd(const RunConfig& c, const Inputs& in) {
  DyadicHFn h = gauge_or(in.gauge, "r^1", c);
  Growth F = nadd_growth_from(h);
  BlockPartition f = nadd_fbuilder(F, in.blocks);
  return fbuilder_report(
      f,
      [&](std::size_t n) {
        Integer fact(1);
        for (std::size_t i = 2; i <= n + 1; ++i) fact *= static_cast<unsigned long>(i);
        Integer lhs = pow2_int(static_cast<unsigned long>(f(n))) * fact;
        Integer rhs = F(f(n + 1));
        return json::array({n, f(n), f(n + 1), to_string(lhs), to_string(rhs), lhs <= rhs});
      },
      {"n", "f_n", "f_n1", "lhs", "growth", "passed"});
}

Report cmd_witness_tprime(const RunConfig& c, const Inputs& in) {
  DyadicHFn h = gauge_or(in.gauge, "r^1", c);
  Growth G = tprime_growth_from(h);
  const Integer gc(static_cast<unsigned long>(in.g_const));
  Growth g = [gc](std::size_t) { return gc; };
  BlockPartition f = tprime_fbuilder(G, g, in.blocks);
  return fbuilder_report(
      f,
      [&](std::size_t n) {
        Integer lhs = pow2_int(static_cast<unsigned long>(f(n))) * gc;
        Integer rhs = G(f(n + 1));
        return json::array({n, f(n), f(n + 1), to_string(lhs), to_string(rhs), lhs <= rhs});
      },
      {"n", "f_n", "f_n1", "lhs", "growth", "passed"});
}

}  // namespace

void write_report(const Report& r, Format format, std::ostream& out) {
  if (format == Format::Json) {
    json j = r.meta;
    j["passed"] = r.passed;
    if (!r.columns.empty()) {
      json rows = json::array();
      for (const auto& row : r.rows) {
        json o = json::object();
        for (std::size_t i = 0; i < r.columns.size() && i < row.size(); ++i) o[r.columns[i]] = row[i];
        rows.push_back(std::move(o));
      }
      j["rows"] = std::move(rows);
    }
    out << j.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Inputs in;
  std::string format = "json";

  CLI::App app{"Exact fractal measures, dimensions and cover witnesses on the Cantor cube",
               "cantordim"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--depth", cfg.depth, "Truncation depth D")->capture_default_str();
  app.add_option("--groups", cfg.groups, "Group horizon J")->capture_default_str();
  app.add_option("--scale", cfg.scale, "Scale m (delta = 2^-m)")->capture_default_str();
  app.add_option("--precision", cfg.precision, "Interval precision in bits")->capture_default_str();
  app.add_option("--budget", cfg.budget, "Explored state budget")
      ->envname("CANTORDIM_BUDGET")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "Output file (default stdout)");

  auto* dim = app.add_subcommand("dim", "Covering numbers N(2^-n) and log2 N / n");
  dim->add_option("--set", in.set, "Set spec (JSON or file)")->required();
  dim->add_option("--from", in.from, "First n")->capture_default_str();

  auto* measure = app.add_subcommand("measure", "Bracket for H^h at scale 2^-m");
  measure->add_option("--set", in.set, "Set spec")->required();
  measure->add_option("--gauge", in.gauge, "Gauge spec or r^s (default r^1)");

  auto* verify = app.add_subcommand("verify", "Run a named verification instance");
  verify->add_option("instance", in.instance,
                     "EC3 | howroyd-i | chain | lambda | gamma | einc | shelahM | shelahN | tprime")
      ->required();
  verify->add_option("--set", in.set, "Set spec");
  verify->add_option("--set2", in.set2, "Second set spec");
  verify->add_option("--gauge", in.gauge, "Gauge spec");
  verify->add_option("--gauge2", in.gauge2, "Second gauge spec");
  verify->add_option("--input", in.input, "Cover or witness file");
  verify->add_option("--criterion", in.criterion, "extension | projection")->capture_default_str();

  auto* cover = app.add_subcommand("cover", "Build covers");
  cover->require_subcommand(1);
  auto* extract = cover->add_subcommand("extract", "Optimal cylinder cover at scale m");
  auto* gamma = cover->add_subcommand("build-gamma", "Gamma-groupable cover of an h-null set");
  for (auto* s : {extract, gamma}) {
    s->add_option("--set", in.set, "Set spec")->required();
    s->add_option("--gauge", in.gauge, "Gauge spec (default r^1)");
  }

  auto* witness = app.add_subcommand("witness", "Compile block partitions f");
  witness->require_subcommand(1);
  auto* me = witness->add_subcommand("me-f", "f with 2^f(k) h(2^-f(k+1)) <= 2^-k");
  auto* nadd = witness->add_subcommand("nadd-f", "f with 2^f(n) (n+1)! <= F(f(n+1))");
  auto* tp = witness->add_subcommand("tprime-f", "f with 2^f(n) g(n) <= G(f(n+1))");
  for (auto* s : {me, nadd, tp}) {
    s->add_option("--gauge", in.gauge, "Gauge spec (default r^1)");
    s->add_option("--blocks", in.blocks, "Number of blocks")->capture_default_str();
  }
  tp->add_option("--g", in.g_const, "Constant bound g(n)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  cfg.format = format == "csv" ? Format::Csv : Format::Json;

  try {
    if (cfg.depth == 0 || cfg.budget == 0) throw InputError("--depth and --budget must be positive");
    Report r;
    if (dim->parsed()) r = cmd_dim(cfg, in);
    else if (measure->parsed()) r = cmd_measure(cfg, in);
    else if (verify->parsed()) r = cmd_verify(cfg, in);
    else if (extract->parsed()) r = cmd_cover_extract(cfg, in);
    else if (gamma->parsed()) r = cmd_cover_gamma(cfg, in);
    else if (me->parsed()) r = cmd_witness_me(cfg, in);
    else if (nadd->parsed()) r = cmd_witness_nadd(cfg, in);
    else r = cmd_witness_tprime(cfg, in);
    r.meta["limits"] = limits(cfg);
    if (cfg.out.empty()) {
      write_report(r, cfg.format, out);
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw InputError("cannot write '" + cfg.out + "'");
      write_report(r, cfg.format, f);
    }
    return r.passed ? kPass : kVerificationFailed;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const DepthExceededError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace cantordim::cli
