#include "cantordim_cli/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace cantordim::cli {

namespace {

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(what + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

std::size_t as_size(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(what + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

json load_json(std::string_view arg, const std::string& what) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[' || arg.front() == '"')) {
    text = std::string(arg);
  } else {
    std::ifstream in{std::string(arg)};
    if (!in) throw InputError(what + ": cannot open '" + std::string(arg) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Rational rational_from(const json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(what + ": rationals are written as strings such as \"1/2\" or integers");
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Interval& v) { return json{{"lo", to_string(v.lo)}, {"hi", to_string(v.hi)}}; }

Word parse_word(const json& j) {
  std::string s = as_string(j, "word");
  for (char c : s) {
    if (c != '0' && c != '1') throw InputError("word '" + s + "' is not a bit string");
  }
  return Word(s);
}

PeriodicBits parse_bits(const json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "zero") return PeriodicBits(Word(), Word("0"));
    if (s == "one") return PeriodicBits(Word(), Word("1"));
    throw InputError("point: unknown shorthand '" + s + "'");
  }
  Word pre = j.contains("preperiod") ? parse_word(j.at("preperiod")) : Word();
  Word per = parse_word(field(j, "period", "point"));
  if (per.empty()) throw InputError("point: period must be nonempty");
  return PeriodicBits(pre, per);
}

IndexSpec parse_index(const json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "evens") return IndexSpec::evens();
    if (s == "odds") return IndexSpec::odds();
    if (s == "all") return IndexSpec::all();
    if (s == "none") return IndexSpec::none();
    throw InputError("index set: unknown shorthand '" + s + "'");
  }
  if (j.is_object() && j.contains("log_blocks")) return IndexSpec::log_blocks(parse_word(j.at("log_blocks")));
  return IndexSpec::periodic(parse_bits(j));
}

TreeSet parse_set(const json& j) {
  if (j.is_string()) return parse_set(json{{"kind", j}});
  const std::string kind = as_string(field(j, "kind", "set"), "set kind");
  if (kind == "full") return TreeSet::full_cube();
  if (kind == "ci") return TreeSet::ci(parse_index(field(j, "I", "ci set")));
  if (kind == "point") return TreeSet::point(parse_bits(field(j, "y", "point set")));
  if (kind == "blocks") {
    std::vector<std::size_t> bounds = parse_indices(field(j, "boundaries", "blocks set"));
    std::vector<std::optional<std::vector<Word>>> blocks;
    for (const auto& b : field(j, "blocks", "blocks set")) {
      if (b.is_null()) {
        blocks.emplace_back();
      } else {
        std::vector<Word> ws;
        for (const auto& w : b) ws.push_back(parse_word(w));
        blocks.emplace_back(std::move(ws));
      }
    }
    return TreeSet::block_constraint(std::move(bounds), std::move(blocks));
  }
  if (kind == "sumset") return TreeSet::sumset(parse_set(field(j, "a", kind)), parse_set(field(j, "b", kind)));
  if (kind == "product") return TreeSet::product(parse_set(field(j, "a", kind)), parse_set(field(j, "b", kind)));
  if (kind == "union") {
    std::vector<TreeSet> parts;
    for (const auto& p : field(j, "parts", kind)) parts.push_back(parse_set(p));
    return TreeSet::union_of(std::move(parts));
  }
  if (kind == "explicit") {
    std::vector<Word> ws;
    for (const auto& w : field(j, "words", kind)) ws.push_back(parse_word(w));
    auto tail = ExplicitTail::Point;
    if (j.contains("tail")) {
      auto t = as_string(j.at("tail"), "explicit tail");
      if (t == "cylinder") tail = ExplicitTail::Cylinder;
      else if (t != "point") throw InputError("explicit tail must be \"point\" or \"cylinder\"");
    }
    return TreeSet::explicit_words(std::move(ws), tail);
  }
  if (kind == "shift") return TreeSet::shift(parse_set(field(j, "of", kind)), as_size(field(j, "by", kind), "shift"));
  if (kind == "dilate") {
    return TreeSet::dilate(parse_set(field(j, "of", kind)), as_size(field(j, "factor", kind), "dilate"));
  }
  throw InputError("set: unknown kind '" + kind + "'");
}

DyadicHFn parse_gauge(const json& j, unsigned default_bits) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.rfind("r^", 0) != 0) throw InputError("gauge shorthand must look like r^1/2");
    return DyadicHFn::power(parse_rational(s.substr(2)), kDefaultGridDepth, default_bits);
  }
  unsigned bits = j.contains("precision_bits") ? static_cast<unsigned>(as_size(j.at("precision_bits"), "precision_bits"))
                                               : default_bits;
  std::size_t n_max = j.contains("n_max") ? as_size(j.at("n_max"), "n_max") : kDefaultGridDepth;
  if (j.contains("power")) return DyadicHFn::power(rational_from(j.at("power"), "power"), n_max, bits);
  if (j.contains("symbolic")) {
    const auto& s = j.at("symbolic");
    SymbolicGauge g{rational_from(field(s, "s", "symbolic gauge"), "s"),
                    s.contains("t") ? rational_from(s.at("t"), "t") : Rational(0)};
    return DyadicHFn::from_symbolic(g, n_max, bits);
  }
  if (j.contains("table")) {
    std::vector<Rational> vals;
    for (const auto& v : j.at("table")) vals.push_back(rational_from(v, "table entry"));
    if (vals.empty()) throw InputError("gauge table is empty");
    return DyadicHFn::from_exact(vals);
  }
  throw InputError("gauge: expected \"symbolic\", \"power\" or \"table\"");
}

Cover parse_cover(const json& j, std::size_t stride) {
  if (!j.is_array()) throw InputError("cover: expected a list of {\"cyl\", \"group\"}");
  Cover c;
  c.stride = stride;
  bool any_group = false, all_group = true;
  for (const auto& e : j) {
    c.elements.push_back(parse_word(field(e, "cyl", "cover element")));
    if (e.contains("group")) {
      any_group = true;
      c.group.push_back(as_size(e.at("group"), "group"));
    } else {
      all_group = false;
    }
  }
  if (any_group && !all_group) throw InputError("cover: either every element has a group or none");
  for (std::size_t i = 1; i < c.group.size(); ++i) {
    if (c.group[i] < c.group[i - 1]) throw InputError("cover: groups must be nondecreasing");
  }
  return c;
}

json to_json(const Cover& c) {
  json out = json::array();
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    json e{{"cyl", c.elements[i].str()}};
    if (c.grouped()) e["group"] = c.group[i];
    out.push_back(std::move(e));
  }
  return out;
}

json to_json(const MeasureBound& b) {
  return json{{"lower", to_string(b.lower)}, {"upper", to_string(b.upper)},
              {"scale_m", b.scale_m},       {"depth", b.depth},
              {"gauge", b.gauge}};
}

namespace {
json opt(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }
}  // namespace

json to_json(const CoverVerdict& v) {
  return json{{"status", to_string(v.status)}, {"j0", opt(v.j0)},   {"horizon", v.horizon},
              {"depth", v.depth},              {"failure_index", opt(v.failure_index)},
              {"note", v.note}};
}

json to_json(const IndexVerdict& v) {
  json per = json::array();
  for (std::size_t i = 0; i < v.indices.size(); ++i) {
    per.push_back(json{{"n", v.indices[i]}, {"passed", static_cast<bool>(v.passed[i])}});
  }
  return json{{"status", to_string(v.status)}, {"n0", opt(v.n0)}, {"horizon", v.horizon},
              {"failure_index", opt(v.failure_index)}, {"note", v.note}, {"per_index", per}};
}

json to_json(const BlockPartition& f) { return json(f.values()); }

std::vector<std::size_t> parse_indices(const json& j) {
  if (!j.is_array()) throw InputError("expected a list of integers");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(as_size(v, "index"));
  return out;
}

BlockPartition parse_partition(const json& j) { return BlockPartition(parse_indices(j)); }

std::vector<std::vector<Word>> parse_word_table(const json& j) {
  if (!j.is_array()) throw InputError("expected a list of word lists");
  std::vector<std::vector<Word>> out;
  for (const auto& row : j) {
    std::vector<Word> ws;
    for (const auto& w : row) ws.push_back(parse_word(w));
    out.push_back(std::move(ws));
  }
  return out;
}

ShelahMWitness parse_shelahM(const json& j) {
  return ShelahMWitness{parse_partition(field(j, "f", "witness")),
                        parse_indices(field(j, "g", "witness")), parse_bits(field(j, "y", "witness"))};
}

ShelahNWitness parse_shelahN(const json& j) {
  ShelahNWitness w{parse_partition(field(j, "f", "witness")), parse_word_table(field(j, "H", "witness"))};
  validate(w);
  return w;
}

TPrimeWitness parse_tprime(const json& j) {
  TPrimeWitness w;
  w.f = parse_partition(field(j, "f", "witness"));
  w.I = parse_indices(field(j, "I", "witness"));
  for (const auto& v : field(j, "g", "witness")) {
    w.g.push_back(Integer(static_cast<unsigned long>(as_size(v, "g"))));
  }
  // H is listed in the order of I.
  auto table = parse_word_table(field(j, "H", "witness"));
  if (table.size() != w.I.size()) throw InputError("witness: H must list one family per index of I");
  for (std::size_t i = 0; i < table.size(); ++i) w.H[w.I[i]] = table[i];
  validate(w);
  return w;
}

Word parse_prefix(const json& j, std::size_t n) {
  if (j.is_string() && j.get<std::string>() != "zero" && j.get<std::string>() != "one") {
    Word w = parse_word(j);
    if (w.size() < n) throw InsufficientDepthError(n, w.size());
    return w;
  }
  return parse_bits(j).prefix(n);
}

}  // namespace cantordim::cli
