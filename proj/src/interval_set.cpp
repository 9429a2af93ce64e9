// SPDX-License-Identifier: Apache-2.0

#include "scpm/interval_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace scpm {

IntervalSet::IntervalSet(Tick begin, Tick end) {
  if (begin < end) parts_.push_back({begin, end});
}

IntervalSet::IntervalSet(std::initializer_list<Interval> parts)
    : IntervalSet(from_unsorted(std::vector<Interval>(parts))) {}

IntervalSet IntervalSet::from_unsorted(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& iv) { return iv.begin >= iv.end; });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    return a.begin < b.begin || (a.begin == b.begin && a.end < b.end);
  });
  std::vector<Interval> out;
  out.reserve(parts.size());
  for (const Interval& iv : parts) {
    if (!out.empty() && iv.begin <= out.back().end)
      out.back().end = std::max(out.back().end, iv.end);
    else
      out.push_back(iv);
  }
  return IntervalSet(std::move(out), 0);
}

Tick IntervalSet::measure() const {
  Tick total = 0;
  for (const Interval& iv : parts_) total += iv.length();
  return total;
}

bool IntervalSet::contains(Tick t) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), t,
                             [](Tick x, const Interval& iv) { return x < iv.begin; });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(t);
}

bool IntervalSet::contains(const IntervalSet& other) const {
  return other.intersection_measure(*this) == other.measure();
}

bool IntervalSet::intersects(const IntervalSet& other) const {
  auto a = parts_.begin();
  auto b = other.parts_.begin();
  while (a != parts_.end() && b != other.parts_.end()) {
    if (a->end <= b->begin)
      ++a;
    else if (b->end <= a->begin)
      ++b;
    else
      return true;
  }
  return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  if (other.empty()) return *this;
  if (empty()) return other;
  std::vector<Interval> out;
  out.reserve(parts_.size() + other.parts_.size());
  auto a = parts_.begin();
  auto b = other.parts_.begin();
  auto push = [&out](const Interval& iv) {
    if (!out.empty() && iv.begin <= out.back().end)
      out.back().end = std::max(out.back().end, iv.end);
    else
      out.push_back(iv);
  };
  while (a != parts_.end() || b != other.parts_.end()) {
    if (b == other.parts_.end() || (a != parts_.end() && a->begin <= b->begin))
      push(*a++);
    else
      push(*b++);
  }
  return IntervalSet(std::move(out), 0);
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  auto a = parts_.begin();
  auto b = other.parts_.begin();
  while (a != parts_.end() && b != other.parts_.end()) {
    const Tick lo = std::max(a->begin, b->begin);
    const Tick hi = std::min(a->end, b->end);
    if (lo < hi) out.push_back({lo, hi});
    if (a->end < b->end)
      ++a;
    else
      ++b;
  }
  return IntervalSet(std::move(out), 0);
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  if (other.empty() || empty()) return *this;
  std::vector<Interval> out;
  auto b = other.parts_.begin();
  for (Interval cur : parts_) {
    while (b != other.parts_.end() && b->end <= cur.begin) ++b;
    auto c = b;
    while (c != other.parts_.end() && c->begin < cur.end) {
      if (c->begin > cur.begin) out.push_back({cur.begin, c->begin});
      cur.begin = std::max(cur.begin, c->end);
      if (cur.begin >= cur.end) break;
      ++c;
    }
    if (cur.begin < cur.end) out.push_back(cur);
  }
  return IntervalSet(std::move(out), 0);
}

Tick IntervalSet::intersection_measure(const IntervalSet& other) const {
  Tick total = 0;
  auto a = parts_.begin();
  auto b = other.parts_.begin();
  while (a != parts_.end() && b != other.parts_.end()) {
    const Tick lo = std::max(a->begin, b->begin);
    const Tick hi = std::min(a->end, b->end);
    if (lo < hi) total += hi - lo;
    if (a->end < b->end)
      ++a;
    else
      ++b;
  }
  return total;
}

std::string IntervalSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

IntervalSet operator|(const IntervalSet& a, const IntervalSet& b) { return a.unite(b); }
IntervalSet operator&(const IntervalSet& a, const IntervalSet& b) { return a.intersect(b); }
IntervalSet operator-(const IntervalSet& a, const IntervalSet& b) { return a.subtract(b); }

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  if (s.empty()) return os << "{}";
  bool first = true;
  for (const Interval& iv : s) {
    if (!first) os << " u ";
    first = false;
    os << '[' << iv.begin << ',' << iv.end << ')';
  }
  return os;
}

}  // namespace scpm
