// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_PATTERN_HPP
#define SCPM_PATTERN_HPP

#include <cstdint>
#include <vector>

namespace scpm {

using ItemIndex = std::uint32_t;

/// Itemset over a fixed universe of `universe()` items, as a bitset.
/// Inclusion is the specificity order: more items, more specific.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static Pattern full(std::size_t universe);
  static Pattern of(std::size_t universe, const std::vector<ItemIndex>& items);

  std::size_t universe() const { return universe_; }
  bool test(ItemIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(ItemIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(ItemIndex i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_subset_of(const Pattern& other) const;
  bool intersects(const Pattern& other) const;

  Pattern& operator&=(const Pattern& other);
  Pattern& operator|=(const Pattern& other);
  friend Pattern operator&(Pattern a, const Pattern& b) { return a &= b; }
  friend Pattern operator|(Pattern a, const Pattern& b) { return a |= b; }

  std::vector<ItemIndex> items() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  /// Arbitrary total order, for use as a map key.
  friend bool operator<(const Pattern& a, const Pattern& b) { return a.words_ < b.words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace scpm

#endif  // SCPM_PATTERN_HPP
