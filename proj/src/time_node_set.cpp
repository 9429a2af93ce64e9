// SPDX-License-Identifier: Apache-2.0

#include "scpm/time_node_set.hpp"

#include <algorithm>

namespace scpm {

namespace {

const IntervalSet kEmpty{};

template <class Op>
TimeNodeSet merge(const std::vector<TimeNodeSet::Entry>& a,
                  const std::vector<TimeNodeSet::Entry>& b, bool keep_a_only,
                  bool keep_b_only, Op op) {
  std::vector<TimeNodeSet::Entry> out;
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && x->node < y->node)) {
      if (keep_a_only) out.push_back(*x);
      ++x;
    } else if (x == a.end() || y->node < x->node) {
      if (keep_b_only) out.push_back(*y);
      ++y;
    } else {
      IntervalSet r = op(x->times, y->times);
      if (!r.empty()) out.push_back({x->node, std::move(r)});
      ++x;
      ++y;
    }
  }
  return TimeNodeSet::from_entries(std::move(out));
}

}  // namespace

TimeNodeSet TimeNodeSet::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& l, const Entry& r) { return l.node < r.node; });
  TimeNodeSet out;
  for (Entry& e : entries) {
    if (e.times.empty()) continue;
    if (!out.entries_.empty() && out.entries_.back().node == e.node)
      out.entries_.back().times = out.entries_.back().times.unite(e.times);
    else
      out.entries_.push_back(std::move(e));
  }
  return out;
}

void TimeNodeSet::add(NodeId node, const IntervalSet& times) {
  if (times.empty()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), node,
                             [](const Entry& e, NodeId n) { return e.node < n; });
  if (it != entries_.end() && it->node == node)
    it->times = it->times.unite(times);
  else
    entries_.insert(it, Entry{node, times});
}

void TimeNodeSet::set(NodeId node, IntervalSet times) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), node,
                             [](const Entry& e, NodeId n) { return e.node < n; });
  const bool found = it != entries_.end() && it->node == node;
  if (times.empty()) {
    if (found) entries_.erase(it);
  } else if (found) {
    it->times = std::move(times);
  } else {
    entries_.insert(it, Entry{node, std::move(times)});
  }
}

const IntervalSet& TimeNodeSet::at(NodeId node) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), node,
                             [](const Entry& e, NodeId n) { return e.node < n; });
  if (it != entries_.end() && it->node == node) return it->times;
  return kEmpty;
}

bool TimeNodeSet::has(NodeId node) const { return !at(node).empty(); }

Tick TimeNodeSet::measure() const {
  Tick total = 0;
  for (const Entry& e : entries_) total += e.times.measure();
  return total;
}

bool TimeNodeSet::contains(const TimeNodeSet& other) const {
  for (const Entry& e : other.entries_)
    if (!at(e.node).contains(e.times)) return false;
  return true;
}

TimeNodeSet TimeNodeSet::unite(const TimeNodeSet& other) const {
  return merge(entries_, other.entries_, true, true,
               [](const IntervalSet& l, const IntervalSet& r) { return l.unite(r); });
}

TimeNodeSet TimeNodeSet::intersect(const TimeNodeSet& other) const {
  return merge(entries_, other.entries_, false, false,
               [](const IntervalSet& l, const IntervalSet& r) { return l.intersect(r); });
}

TimeNodeSet TimeNodeSet::subtract(const TimeNodeSet& other) const {
  return merge(entries_, other.entries_, true, false,
               [](const IntervalSet& l, const IntervalSet& r) { return l.subtract(r); });
}

Tick TimeNodeSet::intersection_measure(const TimeNodeSet& other) const {
  Tick total = 0;
  auto x = entries_.begin();
  auto y = other.entries_.begin();
  while (x != entries_.end() && y != other.entries_.end()) {
    if (x->node < y->node) {
      ++x;
    } else if (y->node < x->node) {
      ++y;
    } else {
      total += x->times.intersection_measure(y->times);
      ++x;
      ++y;
    }
  }
  return total;
}

}  // namespace scpm
