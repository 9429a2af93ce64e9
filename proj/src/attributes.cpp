// SPDX-License-Identifier: Apache-2.0

#include "scpm/attributes.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "scpm/error.hpp"

namespace scpm {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string f;
  while (is >> f) out.push_back(f);
  return out;
}

bool skip_line(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

// Reads whitespace/comma separated rows of at least `min_cols` fields.
template <class Fn>
void for_each_row(const std::string& path, std::size_t min_cols, Fn fn) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    auto f = split_ws(line);
    if (f.size() < min_cols)
      throw InputError(path + ":" + std::to_string(lineno) + ": expected at least " +
                       std::to_string(min_cols) + " columns");
    fn(f, path + ":" + std::to_string(lineno));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ItemUniverse

ItemUniverse::ItemUniverse(std::vector<std::string> items) {
  for (auto& it : items) intern(it);
}

ItemIndex ItemUniverse::intern(std::string_view item) {
  auto [it, inserted] = index_.try_emplace(std::string(item), static_cast<ItemIndex>(items_.size()));
  if (inserted) items_.emplace_back(item);
  return it->second;
}

std::optional<ItemIndex> ItemUniverse::find(std::string_view item) const {
  auto it = index_.find(std::string(item));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> ItemUniverse::names_of(const Pattern& p) const {
  std::vector<std::string> out;
  for (ItemIndex i : p.items()) out.push_back(items_.at(i));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Tables

void AttributeTable::add(const std::string& node, const std::string& item) {
  if (std::find(items.begin(), items.end(), item) == items.end()) items.push_back(item);
  auto row = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.first == node; });
  if (row == rows.end()) {
    rows.push_back({node, {item}});
  } else if (std::find(row->second.begin(), row->second.end(), item) == row->second.end()) {
    row->second.push_back(item);
  }
}

AttributeTable parse_attribute_csv(std::istream& in, const std::string& source) {
  AttributeTable table;
  std::set<std::string> seen_items;
  std::map<std::string, std::set<std::string>> seen_rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    const auto comma = line.find(',');
    const std::string node = trim(comma == std::string::npos ? line : line.substr(0, comma));
    if (node.empty()) throw InputError(where + ": missing node identifier");
    std::vector<std::string> items;
    std::set<std::string> item_set;
    if (comma != std::string::npos) {
      std::string rest = line.substr(comma + 1);
      if (rest.find(',') != std::string::npos)
        throw InputError(where + ": expected `node,item1;item2;...` (items are ';'-separated)");
      std::istringstream is(rest);
      std::string item;
      while (std::getline(is, item, ';')) {
        item = trim(item);
        if (item.empty() || !item_set.insert(item).second) continue;
        items.push_back(item);
      }
    }
    auto [it, fresh] = seen_rows.try_emplace(node, item_set);
    if (!fresh) {
      if (it->second != item_set)
        throw InputError(where + ": node '" + node +
                         "' has a second, different description; time-varying descriptions "
                         "are not supported");
      continue;
    }
    for (const auto& i : items)
      if (seen_items.insert(i).second) table.items.push_back(i);
    table.rows.push_back({node, std::move(items)});
  }
  return table;
}

AttributeTable load_attribute_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open attribute file '" + path + "'");
  return parse_attribute_csv(in, path);
}

AttributeTable load_hs327_attributes(const Hs327Sources& src) {
  AttributeTable t;
  if (src.metadata) {
    for_each_row(*src.metadata, 3, [&](const std::vector<std::string>& f, const std::string&) {
      t.add(f[0], "C_" + f[1]);
      t.add(f[0], "G_" + f[2]);
    });
  }
  if (src.contacts) {
    for_each_row(*src.contacts, 5, [&](const std::vector<std::string>& f, const std::string&) {
      t.add(f[1], "C_" + f[3]);
      t.add(f[2], "C_" + f[4]);
    });
  }
  if (src.facebook) {
    for_each_row(*src.facebook, 3, [&](const std::vector<std::string>& f, const std::string&) {
      if (f[2] != "1") return;
      t.add(f[0], "F_" + f[1]);
      t.add(f[1], "F_" + f[0]);
    });
  }
  if (src.friendship) {
    for_each_row(*src.friendship, 2, [&](const std::vector<std::string>& f, const std::string&) {
      t.add(f[0], "D_" + f[1]);
    });
  }
  if (src.diary) {
    for_each_row(*src.diary, 2, [&](const std::vector<std::string>& f, const std::string&) {
      t.add(f[0], "M_" + f[1]);
    });
  }
  return t;
}

// ---------------------------------------------------------------------------
// AttributeContext

AttributeContext::AttributeContext(ItemUniverse universe, std::vector<Pattern> descriptions)
    : universe_(std::move(universe)), descriptions_(std::move(descriptions)) {
  for (const Pattern& d : descriptions_)
    if (d.universe() != universe_.size())
      throw InvariantError("description built over a different item universe");
}

AttributeContext AttributeContext::bind(const AttributeTable& table, const StreamGraph& s,
                                        std::vector<std::string>* warnings) {
  ItemUniverse universe(table.items);
  std::vector<Pattern> desc(s.node_count(), Pattern(universe.size()));
  std::vector<bool> described(s.node_count(), false);
  for (const auto& [node, items] : table.rows) {
    auto v = s.find(node);
    if (!v) {
      if (warnings) warnings->push_back("attribute node '" + node + "' does not occur in the stream");
      continue;
    }
    described[*v] = true;
    for (const auto& item : items) desc[*v].set(*universe.find(item));
  }
  if (warnings) {
    for (NodeId v = 0; v < s.node_count(); ++v)
      if (!described[v])
        warnings->push_back("stream node '" + s.name(v) + "' has no description (empty pattern)");
  }
  return AttributeContext(std::move(universe), std::move(desc));
}

Pattern AttributeContext::pattern_of(const std::vector<std::string>& items) const {
  Pattern p(universe_.size());
  for (const auto& name : items) {
    auto i = universe_.find(name);
    if (!i) throw InputError("unknown item '" + name + "'");
    p.set(*i);
  }
  return p;
}

AttributeContext AttributeContext::reordered(const std::vector<ItemIndex>& order) const {
  const std::size_t n = universe_.size();
  if (order.size() != n) throw ConfigError("item order must be a permutation of all items");
  std::vector<ItemIndex> new_index(n, static_cast<ItemIndex>(n));
  std::vector<std::string> names;
  for (ItemIndex i = 0; i < n; ++i) {
    if (order[i] >= n || new_index[order[i]] != n)
      throw ConfigError("item order must be a permutation of all items");
    new_index[order[i]] = i;
    names.push_back(universe_.name(order[i]));
  }
  std::vector<Pattern> desc;
  desc.reserve(descriptions_.size());
  for (const Pattern& d : descriptions_) {
    Pattern p(n);
    for (ItemIndex i : d.items()) p.set(new_index[i]);
    desc.push_back(std::move(p));
  }
  return AttributeContext(ItemUniverse(std::move(names)), std::move(desc));
}

// ---------------------------------------------------------------------------
// Operators

TimeNodeSet ext(const Pattern& q, const AttributeContext& ctx, const StreamGraph& s) {
  return s.presence_set().filter_nodes(
      [&](NodeId v) { return q.is_subset_of(ctx.description(v)); });
}

TimeNodeSet restrict_to_item(const TimeNodeSet& x, ItemIndex item, const AttributeContext& ctx) {
  return x.filter_nodes([&](NodeId v) { return ctx.description(v).test(item); });
}

Pattern intent(const TimeNodeSet& x, const AttributeContext& ctx) {
  Pattern p = ctx.full_pattern();
  for (const auto& e : x)
    if (e.times.measure() > 0) p &= ctx.description(e.node);
  return p;
}

Closure closure(const Pattern& q, const AttributeContext& ctx, const StreamGraph& s,
                const CoreFunction& core) {
  TimeNodeSet support = core(ext(q, ctx, s));
  Pattern p = intent(support, ctx);
  return {std::move(p), std::move(support)};
}

}  // namespace scpm
