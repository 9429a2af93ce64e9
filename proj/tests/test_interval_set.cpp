// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <set>

#include "doctest.h"
#include "scpm/interval_set.hpp"

using scpm::Interval;
using scpm::IntervalSet;
using scpm::Tick;

namespace {

// Membership oracle: the set of integer ticks in [lo, hi) covered by s.
std::set<Tick> ticks(const IntervalSet& s, Tick lo = -2, Tick hi = 40) {
  std::set<Tick> out;
  for (Tick t = lo; t < hi; ++t)
    if (s.contains(t)) out.insert(t);
  return out;
}

IntervalSet random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_int_distribution<Tick> t(0, 30);
  std::vector<Interval> parts;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Tick a = t(rng), b = t(rng);
    parts.push_back({std::min(a, b), std::max(a, b)});
  }
  return IntervalSet::from_unsorted(parts);
}

bool canonical(const IntervalSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.intervals()[i].begin >= s.intervals()[i].end) return false;
    if (i > 0 && s.intervals()[i - 1].end >= s.intervals()[i].begin) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("union") {
  CHECK((IntervalSet(0, 2) | IntervalSet{}) == IntervalSet(0, 2));
  CHECK((IntervalSet(0, 2) | IntervalSet(2, 3)) == IntervalSet(0, 3));
  CHECK((IntervalSet(0, 2) | IntervalSet(2, 3)).size() == 1);

  const IntervalSet a{{0, 2}, {5, 6}};
  const IntervalSet expected{{0, 3}, {5, 6}};
  CHECK((a | IntervalSet(1, 3)) == expected);
  // checked tick by tick over 0..6
  std::set<Tick> want = {0, 1, 2, 5};
  CHECK(ticks(a | IntervalSet(1, 3), 0, 7) == want);
}

TEST_CASE("intersection") {
  const IntervalSet a{{0, 2}, {5, 9}};
  CHECK((a & a) == a);
  CHECK((IntervalSet(0, 1) & IntervalSet(1, 2)).empty());
  CHECK((IntervalSet(0, 2) & IntervalSet(1, 3)) == IntervalSet(1, 2));
  CHECK(ticks(IntervalSet(0, 2) & IntervalSet(1, 3)) == std::set<Tick>{1});
}

TEST_CASE("subtraction") {
  const IntervalSet a{{0, 4}, {6, 9}};
  CHECK((a - IntervalSet{}) == a);
  CHECK((a - a).empty());
  const IntervalSet expected{{0, 1}, {2, 3}};
  CHECK((IntervalSet(0, 3) - IntervalSet(1, 2)) == expected);
  CHECK(ticks(IntervalSet(0, 3) - IntervalSet(1, 2)) == std::set<Tick>{0, 2});
  CHECK((IntervalSet(0, 10) - IntervalSet{{1, 2}, {4, 5}, {9, 12}}) ==
        IntervalSet{{0, 1}, {2, 4}, {5, 9}});
}

TEST_CASE("measure") {
  CHECK(IntervalSet{}.measure() == 0);
  CHECK(IntervalSet(0, 2).measure() == 2);
  CHECK(IntervalSet{{0, 2}, {5, 6}}.measure() == 3);
}

TEST_CASE("degenerate and unsorted input is normalized") {
  CHECK(IntervalSet(3, 3).empty());
  CHECK(IntervalSet(5, 1).empty());
  const auto s = IntervalSet::from_unsorted({{7, 8}, {1, 3}, {2, 2}, {3, 4}, {0, 1}});
  CHECK(s == IntervalSet(0, 4) .unite(IntervalSet(7, 8)));
  CHECK(s.size() == 2);
}

TEST_CASE("random sets follow the tick oracle and boolean algebra laws") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 500; ++round) {
    const IntervalSet a = random_set(rng), b = random_set(rng), c = random_set(rng);
    REQUIRE(canonical(a));
    CHECK(IntervalSet::from_unsorted({a.begin(), a.end()}) == a);

    const auto ta = ticks(a), tb = ticks(b);
    std::set<Tick> tu, ti, td;
    for (Tick t : ta) (tb.count(t) ? ti : td).insert(t);
    tu = ta;
    tu.insert(tb.begin(), tb.end());
    CHECK(ticks(a | b) == tu);
    CHECK(ticks(a & b) == ti);
    CHECK(ticks(a - b) == td);
    CHECK(canonical(a | b));
    CHECK(canonical(a & b));
    CHECK(canonical(a - b));

    CHECK((a | b) == (b | a));
    CHECK((a & b) == (b & a));
    CHECK(((a | b) | c) == (a | (b | c)));
    CHECK(((a & b) & c) == (a & (b & c)));
    CHECK(((a - (a & b)) | (a & b)) == a);

    // De Morgan inside a bounding interval U
    const IntervalSet u(0, 31);
    CHECK((u - (a | b)) == ((u - a) & (u - b)));
    CHECK((u - (a & b)) == ((u - a) | (u - b)));

    CHECK((a | b).measure() + (a & b).measure() == a.measure() + b.measure());
    CHECK(a.intersection_measure(b) == (a & b).measure());
    CHECK(a.intersects(b) == !(a & b).empty());
    CHECK(a.contains(a & b));
    CHECK((a | b).measure() <= a.measure() + b.measure());
    CHECK((a & b).measure() <= std::min(a.measure(), b.measure()));
  }
}
