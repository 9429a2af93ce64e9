// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_INTERVAL_SET_HPP
#define SCPM_INTERVAL_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace scpm {

/// A point on the discretized time axis, counted in ticks.
using Tick = std::int64_t;

/// Half-open interval [begin, end).
struct Interval {
  Tick begin = 0;
  Tick end = 0;

  constexpr Tick length() const { return end - begin; }
  constexpr bool contains(Tick t) const { return begin <= t && t < end; }
  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of half-open intervals kept in canonical form: sorted,
/// non-empty, pairwise disjoint and non-adjacent. Two sets holding the same
/// points therefore compare equal.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(Tick begin, Tick end);
  IntervalSet(std::initializer_list<Interval> parts);

  /// Normalizes an arbitrary list (unsorted, overlapping, empty pieces).
  static IntervalSet from_unsorted(std::vector<Interval> parts);

  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  std::span<const Interval> intervals() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// Total duration in ticks.
  Tick measure() const;
  bool contains(Tick t) const;
  bool contains(const IntervalSet& other) const;
  bool intersects(const IntervalSet& other) const;

  /// Smallest and largest covered instants; undefined on an empty set.
  Tick lower() const { return parts_.front().begin; }
  Tick upper() const { return parts_.back().end; }

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet subtract(const IntervalSet& other) const;
  Tick intersection_measure(const IntervalSet& other) const;

  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> canonical, int /*tag*/)
      : parts_(std::move(canonical)) {}

  std::vector<Interval> parts_;
};

IntervalSet operator|(const IntervalSet& a, const IntervalSet& b);
IntervalSet operator&(const IntervalSet& a, const IntervalSet& b);
IntervalSet operator-(const IntervalSet& a, const IntervalSet& b);

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace scpm

#endif  // SCPM_INTERVAL_SET_HPP
