// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_ATTRIBUTES_HPP
#define SCPM_ATTRIBUTES_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scpm/pattern.hpp"
#include "scpm/stream_graph.hpp"
#include "scpm/time_node_set.hpp"

namespace scpm {

/// Ordered list of distinct items. Indices are dense and the order drives
/// enumeration order.
class ItemUniverse {
 public:
  ItemUniverse() = default;
  explicit ItemUniverse(std::vector<std::string> items);

  /// Index of `item`, inserting it at the end when new.
  ItemIndex intern(std::string_view item);
  std::optional<ItemIndex> find(std::string_view item) const;

  std::size_t size() const { return items_.size(); }
  const std::string& name(ItemIndex i) const { return items_.at(i); }
  const std::vector<std::string>& names() const { return items_; }

  /// Item names of `p`, sorted by name.
  std::vector<std::string> names_of(const Pattern& p) const;

 private:
  std::vector<std::string> items_;
  std::unordered_map<std::string, ItemIndex> index_;
};

/// Raw node -> item-name table as read from disk, before it is bound to a
/// stream. Items keep first-appearance order.
struct AttributeTable {
  std::vector<std::string> items;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;

  void add(const std::string& node, const std::string& item);
};

/// Parses `node,item1;item2;...` lines. A node listed twice with different
/// items is rejected: descriptions must be time-constant.
AttributeTable parse_attribute_csv(std::istream& in, const std::string& source = "<input>");
AttributeTable load_attribute_csv(const std::string& path);

/// Items from a high-school contact dataset: `C_<class>` and `G_<gender>`
/// from the metadata file (`id class gender`), `F_<id>` from Facebook pairs
/// (`i j flag`, symmetric, flag 1 = friends), `D_<id>` from declared
/// friendships (`i j`) and `M_<id>` from the contact diary (`i j weight`).
struct Hs327Sources {
  std::optional<std::string> metadata;
  std::optional<std::string> facebook;
  std::optional<std::string> friendship;
  std::optional<std::string> diary;
  std::optional<std::string> contacts;  // sociopatterns `t i j Ci Cj`, classes only
};
AttributeTable load_hs327_attributes(const Hs327Sources& sources);

/// Node descriptions bound to the nodes of one stream.
class AttributeContext {
 public:
  AttributeContext() = default;
  AttributeContext(ItemUniverse universe, std::vector<Pattern> descriptions);

  /// Binds a table to `s`. Nodes of the table missing from the stream and
  /// stream nodes missing from the table are reported in `warnings`; the
  /// latter get an empty description.
  static AttributeContext bind(const AttributeTable& table, const StreamGraph& s,
                               std::vector<std::string>* warnings = nullptr);

  const ItemUniverse& universe() const { return universe_; }
  std::size_t item_count() const { return universe_.size(); }
  const Pattern& description(NodeId v) const { return descriptions_.at(v); }
  std::size_t node_count() const { return descriptions_.size(); }

  Pattern empty_pattern() const { return Pattern(universe_.size()); }
  Pattern full_pattern() const { return Pattern::full(universe_.size()); }
  Pattern pattern_of(const std::vector<std::string>& items) const;

  /// Same descriptions, items renumbered so that `order[i]` becomes index i.
  AttributeContext reordered(const std::vector<ItemIndex>& order) const;

 private:
  ItemUniverse universe_;
  std::vector<Pattern> descriptions_;
};

/// ext(q): presence of every node whose description contains q.
TimeNodeSet ext(const Pattern& q, const AttributeContext& ctx, const StreamGraph& s);
/// Restriction of `x` to the nodes whose description contains item `item`.
TimeNodeSet restrict_to_item(const TimeNodeSet& x, ItemIndex item, const AttributeContext& ctx);
/// int(X): intersection of the descriptions of the nodes occurring in X, the
/// full item set when X is empty.
Pattern intent(const TimeNodeSet& x, const AttributeContext& ctx);

using CoreFunction = std::function<TimeNodeSet(const TimeNodeSet&)>;

struct Closure {
  Pattern pattern;
  TimeNodeSet support;
};

/// f(q) = int(p(ext(q))) together with p(ext(q)).
Closure closure(const Pattern& q, const AttributeContext& ctx, const StreamGraph& s,
                const CoreFunction& core);

}  // namespace scpm

#endif  // SCPM_ATTRIBUTES_HPP
