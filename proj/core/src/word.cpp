#include "cantordim/word.hpp"

#include <numeric>

#include "cantordim/errors.hpp"

namespace cantordim {

Word::Word(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') throw InputError("word contains non-binary character: '" + bits_ + "'");
  }
}

Word Word::extended(int bit) const {
  Word w = *this;
  w.push_back(bit);
  return w;
}

Word Word::slice(std::size_t a, std::size_t b) const {
  if (a > b || b > bits_.size()) {
    throw InputError("slice [" + std::to_string(a) + "," + std::to_string(b) +
                     ") out of range for word of length " + std::to_string(bits_.size()));
  }
  Word w;
  w.bits_ = bits_.substr(a, b - a);
  return w;
}

Word Word::concat(const Word& other) const {
  Word w;
  w.bits_ = bits_ + other.bits_;
  return w;
}

Word Word::xor_with(const Word& other) const {
  if (other.size() != size()) throw InputError("xor of words with different lengths");
  Word w = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    w.bits_[i] = (bits_[i] == other.bits_[i]) ? '0' : '1';
  }
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  return other.bits_.size() >= bits_.size() && other.bits_.compare(0, bits_.size(), bits_) == 0;
}

std::optional<std::size_t> first_difference(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

PeriodicBits::PeriodicBits(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw InputError("periodic bit sequence needs a nonempty period");
}

int PeriodicBits::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

Word PeriodicBits::prefix(std::size_t n) const {
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.push_back(at(i) ? '1' : '0');
  return Word(s);
}

std::size_t PeriodicBits::ones_in_period() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < per_.size(); ++i) c += static_cast<std::size_t>(per_[i]);
  return c;
}

std::size_t PeriodicBits::ones_below(std::size_t n) const {
  std::size_t c = 0;
  std::size_t head = std::min(n, pre_.size());
  for (std::size_t i = 0; i < head; ++i) c += static_cast<std::size_t>(pre_[i]);
  if (n <= pre_.size()) return c;
  std::size_t rest = n - pre_.size();
  c += (rest / per_.size()) * ones_in_period();
  for (std::size_t i = 0; i < rest % per_.size(); ++i) c += static_cast<std::size_t>(per_[i]);
  return c;
}

std::size_t lcm_bounded(std::size_t a, std::size_t b) {
  std::size_t l = std::lcm(a, b);
  if (l > (std::size_t{1} << 16)) throw InputError("period too long after combination");
  return l;
}

}  // namespace cantordim
