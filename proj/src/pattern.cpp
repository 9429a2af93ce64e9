// SPDX-License-Identifier: Apache-2.0

#include "scpm/pattern.hpp"

#include <bit>

namespace scpm {

Pattern Pattern::full(std::size_t universe) {
  Pattern p(universe);
  for (auto& w : p.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !p.words_.empty())
    p.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return p;
}

Pattern Pattern::of(std::size_t universe, const std::vector<ItemIndex>& items) {
  Pattern p(universe);
  for (ItemIndex i : items) p.set(i);
  return p;
}

std::size_t Pattern::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Pattern::is_subset_of(const Pattern& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool Pattern::intersects(const Pattern& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

Pattern& Pattern::operator&=(const Pattern& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Pattern& Pattern::operator|=(const Pattern& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<ItemIndex> Pattern::items() const {
  std::vector<ItemIndex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<ItemIndex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace scpm
