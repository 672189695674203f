#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cantordim/cantordim.hpp"

namespace cantordim::cli {

using json = nlohmann::json;

/// Inline JSON (starting with '{', '[' or '"') or a path to a JSON file. Parse errors become
/// InputError carrying the byte offset.
json load_json(std::string_view arg, const std::string& what);

Rational rational_from(const json& j, const std::string& what);
json to_json(const Rational& q);
json to_json(const Interval& v);

/// "evens", "odds", "all", "none", {"preperiod": "..", "period": ".."} or {"log_blocks": ".."}.
IndexSpec parse_index(const json& j);
PeriodicBits parse_bits(const json& j);

/// {"kind": "full" | "ci" | "point" | "blocks" | "sumset" | "product" | "union" | "explicit" |
///  "shift" | "dilate", ...}
TreeSet parse_set(const json& j);

/// {"symbolic": {"s": .., "t": ..}}, {"power": s}, {"table": [..]} (exact values), or the
/// string shorthand "r^s".
DyadicHFn parse_gauge(const json& j, unsigned default_bits = kDefaultPrecisionBits);

/// [{"cyl": "0101", "group": j}, ...]; "group" may be omitted on every element.
Cover parse_cover(const json& j, std::size_t stride = 1);
json to_json(const Cover& c);

json to_json(const MeasureBound& b);
json to_json(const CoverVerdict& v);
json to_json(const IndexVerdict& v);
json to_json(const BlockPartition& f);

BlockPartition parse_partition(const json& j);
std::vector<std::vector<Word>> parse_word_table(const json& j);
std::vector<std::size_t> parse_indices(const json& j);
Word parse_word(const json& j);

ShelahMWitness parse_shelahM(const json& j);
ShelahNWitness parse_shelahN(const json& j);
TPrimeWitness parse_tprime(const json& j);

/// A prefix given as a bit string or as a periodic point {"preperiod", "period"} cut at n.
Word parse_prefix(const json& j, std::size_t n);

}  // namespace cantordim::cli
