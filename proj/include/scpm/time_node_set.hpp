// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_TIME_NODE_SET_HPP
#define SCPM_TIME_NODE_SET_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "scpm/interval_set.hpp"

namespace scpm {

using NodeId = std::uint32_t;

/// A set of time-nodes, stored as node -> IntervalSet. Nodes whose interval
/// set is empty are not stored, so equality is equality of point sets.
class TimeNodeSet {
 public:
  struct Entry {
    NodeId node;
    IntervalSet times;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  TimeNodeSet() = default;

  /// Adds `times` to whatever is already stored for `node`.
  void add(NodeId node, const IntervalSet& times);
  /// Replaces the entry for `node`; an empty set erases it.
  void set(NodeId node, IntervalSet times);

  /// Returns the entry for `node`, or an empty set.
  const IntervalSet& at(NodeId node) const;
  bool has(NodeId node) const;

  bool empty() const { return entries_.empty(); }
  std::size_t node_count() const { return entries_.size(); }
  std::span<const Entry> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Sum of the per-node durations (node-ticks).
  Tick measure() const;
  bool contains(const TimeNodeSet& other) const;

  TimeNodeSet unite(const TimeNodeSet& other) const;
  TimeNodeSet intersect(const TimeNodeSet& other) const;
  TimeNodeSet subtract(const TimeNodeSet& other) const;
  Tick intersection_measure(const TimeNodeSet& other) const;

  /// Keeps only the entries whose node satisfies `keep`.
  template <class Pred>
  TimeNodeSet filter_nodes(Pred keep) const {
    TimeNodeSet out;
    for (const Entry& e : entries_)
      if (keep(e.node)) out.entries_.push_back(e);
    return out;
  }

  /// Builds from entries in any order; duplicates are united.
  static TimeNodeSet from_entries(std::vector<Entry> entries);

  friend bool operator==(const TimeNodeSet&, const TimeNodeSet&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by node, all non-empty
};

}  // namespace scpm

#endif  // SCPM_TIME_NODE_SET_HPP
