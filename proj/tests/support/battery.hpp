#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"

namespace battery {

struct Entry {
  std::string name;
  cantordim::TreeSet set;
  oracle::TraceFn trace;
};

/// Stride-1 sets covering every set kind.
inline std::vector<Entry> sets() {
  using namespace cantordim;
  auto evens = [](std::size_t i) { return i % 2 == 0; };
  auto odds = [](std::size_t i) { return i % 2 == 1; };
  auto every3 = [](std::size_t i) { return i % 3 == 0; };
  auto logb = [](std::size_t i) { return i > 0 && (std::bit_width(i) - 1) % 2 == 0; };
  std::vector<Entry> out;
  out.push_back({"full", TreeSet::full_cube(), oracle::full()});
  out.push_back({"C_evens", TreeSet::ci(IndexSpec::evens()), oracle::ci(evens)});
  out.push_back({"C_odds", TreeSet::ci(IndexSpec::odds()), oracle::ci(odds)});
  out.push_back({"C_3N", TreeSet::ci(IndexSpec::periodic("", "100")), oracle::ci(every3)});
  out.push_back({"C_logblocks", TreeSet::ci(IndexSpec::log_blocks(Word("10"))), oracle::ci(logb)});
  out.push_back({"point_1(01)", TreeSet::point(PeriodicBits(Word("1"), Word("01"))),
                 oracle::point([](std::size_t i) { return i == 0 ? '1' : (i % 2 == 1 ? '0' : '1'); })});
  out.push_back({"blocks", TreeSet::block_constraint({0, 2, 5, 7}, {std::vector<Word>{Word("01"), Word("10")}, std::nullopt,
                                                                    std::vector<Word>{Word("11")}}),
                 oracle::blocks({0, 2, 5, 7}, {std::vector<std::string>{"01", "10"}, std::nullopt,
                                               std::vector<std::string>{"11"}})});
  out.push_back({"explicit_pts", TreeSet::explicit_words({Word("011"), Word("100"), Word("101")}),
                 oracle::explicit_words({"011", "100", "101"}, false)});
  out.push_back({"explicit_cyl", TreeSet::explicit_words({Word("00"), Word("11")}, ExplicitTail::Cylinder),
                 oracle::explicit_words({"00", "11"}, true)});
  TreeSet ce = TreeSet::ci(IndexSpec::evens());
  TreeSet p = TreeSet::point(PeriodicBits(Word("1"), Word("01")));
  out.push_back({"union", TreeSet::union_of({ce, p}), oracle::union_of({oracle::ci(evens), out[5].trace})});
  out.push_back({"C_evens+point", TreeSet::sumset(ce, p), oracle::sumset(oracle::ci(evens), out[5].trace)});
  out.push_back({"shift1(C_evens)", TreeSet::shift(ce, 1), oracle::shift(oracle::ci(evens), 1)});
  out.push_back({"dilate2(C_3N)", TreeSet::dilate(out[3].set, 2), oracle::dilate(oracle::ci(every3), 2)});
  return out;
}

/// The stride-1 battery plus a few interleaved products.
inline std::vector<Entry> with_products() {
  auto s = sets();
  auto out = s;
  out.push_back({"C_evens x C_odds", cantordim::TreeSet::product(s[1].set, s[2].set),
                 oracle::product(s[1].trace, s[2].trace)});
  out.push_back({"full x point", cantordim::TreeSet::product(s[0].set, s[5].set),
                 oracle::product(s[0].trace, s[5].trace)});
  out.push_back({"blocks x explicit", cantordim::TreeSet::product(s[6].set, s[7].set),
                 oracle::product(s[6].trace, s[7].trace)});
  return out;
}

}  // namespace battery
