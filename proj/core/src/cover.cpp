#include "cantordim/cover.hpp"

#include "cantordim/errors.hpp"

namespace cantordim {

std::vector<std::size_t> Cover::members(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (group[i] == j) out.push_back(i);
  }
  return out;
}

void Cover::add_group(const std::vector<Word>& words, std::size_t j) {
  if (!group.empty() && group.back() > j) throw InputError("groups must be consecutive");
  if (group.size() != elements.size()) throw InputError("cover mixes grouped and ungrouped items");
  for (const auto& w : words) {
    elements.push_back(w);
    group.push_back(j);
  }
}

}  // namespace cantordim
