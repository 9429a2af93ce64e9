// SPDX-License-Identifier: Apache-2.0

// Fixture paths and random small instances shared by the test binaries.

#ifndef SCPM_TESTS_SUPPORT_HPP
#define SCPM_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "scpm/attributes.hpp"
#include "scpm/cores.hpp"
#include "scpm/ingest.hpp"
#include "scpm/stream_graph.hpp"

#ifndef SCPM_FIXTURE_DIR
#define SCPM_FIXTURE_DIR "fixtures"
#endif

namespace scpm::testing {

inline std::string fixture(const std::string& rel) { return std::string(SCPM_FIXTURE_DIR) + "/" + rel; }

inline StreamGraph load_fixture_stream(const std::string& dir, bool directed = false,
                                       bool with_presence = false) {
  IngestOptions opts;
  opts.directed = directed;
  std::optional<std::string> presence;
  if (with_presence) presence = fixture(dir + "/presence.txt");
  return load_link_stream(fixture(dir + "/stream.csv"), LinkFormat::Quadruples, opts, presence);
}

inline AttributeContext load_fixture_context(const std::string& dir, const StreamGraph& s) {
  return AttributeContext::bind(load_attribute_csv(fixture(dir + "/attributes.csv")), s);
}

struct RandomLimits {
  int max_nodes = 5;
  int max_intervals = 12;
  Tick max_time = 20;
  int max_items = 6;
  bool extra_presence = true;  // sometimes give nodes presence beyond their contacts
};

inline std::string node_name(int i) { return "n" + std::to_string(i); }

inline StreamGraph random_stream(std::mt19937_64& rng, bool directed, const RandomLimits& lim = {}) {
  std::uniform_int_distribution<int> n_nodes(2, lim.max_nodes);
  const int n = n_nodes(rng);
  std::uniform_int_distribution<int> n_iv(0, lim.max_intervals);
  std::uniform_int_distribution<int> node(0, n - 1);
  std::uniform_int_distribution<Tick> t(0, lim.max_time - 1);
  std::uniform_int_distribution<Tick> len(1, 6);
  StreamGraph::Builder b(directed);
  for (int i = 0; i < n; ++i) b.add_node(node_name(i));
  const int m = n_iv(rng);
  std::vector<std::pair<int, IntervalSet>> touched;
  for (int i = 0; i < m; ++i) {
    int u = node(rng), v = node(rng);
    if (u == v) v = (u + 1) % n;
    const Tick s = t(rng);
    const Tick e = std::min(lim.max_time, s + len(rng));
    b.add_interaction(node_name(u), node_name(v), Interval{s, e});
    touched.push_back({u, IntervalSet(s, e)});
    touched.push_back({v, IntervalSet(s, e)});
  }
  if (lim.extra_presence && std::bernoulli_distribution(0.3)(rng)) {
    for (int v = 0; v < n; ++v) {
      IntervalSet p;
      for (const auto& [w, iv] : touched)
        if (w == v) p = p.unite(iv);
      const Tick s = t(rng);
      p = p.unite(IntervalSet(s, std::min(lim.max_time, s + len(rng))));
      b.add_presence(node_name(v), p);
    }
  }
  b.set_horizon({0, lim.max_time});
  return b.build();
}

inline AttributeContext random_context(std::mt19937_64& rng, const StreamGraph& s,
                                       const RandomLimits& lim = {}) {
  std::uniform_int_distribution<int> n_items(0, lim.max_items);
  const int items = n_items(rng);
  std::vector<std::string> names;
  for (int i = 0; i < items; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  ItemUniverse u(names);
  std::vector<Pattern> desc;
  std::bernoulli_distribution coin(0.6);
  for (NodeId v = 0; v < s.node_count(); ++v) {
    Pattern p(u.size());
    for (ItemIndex i = 0; i < u.size(); ++i)
      if (coin(rng)) p.set(i);
    desc.push_back(p);
  }
  return AttributeContext(u, desc);
}

/// Random subset of `x`: per node, a random window intersected with x(v).
inline TimeNodeSet random_subset(std::mt19937_64& rng, const TimeNodeSet& x, Tick max_time = 20) {
  std::uniform_int_distribution<Tick> t(0, max_time);
  std::bernoulli_distribution keep(0.8);
  std::vector<TimeNodeSet::Entry> out;
  for (const auto& e : x) {
    if (!keep(rng)) continue;
    Tick a = t(rng), b = t(rng);
    if (a > b) std::swap(a, b);
    IntervalSet window = std::bernoulli_distribution(0.4)(rng) ? IntervalSet(0, max_time)
                                                                : IntervalSet(a, b + 1);
    out.push_back({e.node, e.times.intersect(window)});
  }
  return TimeNodeSet::from_entries(std::move(out));
}

inline CoreSpec random_spec(std::mt19937_64& rng, bool directed) {
  if (directed) {
    std::uniform_int_distribution<int> d(0, 2);
    return CoreSpec::hub_authority(d(rng), d(rng));
  }
  return CoreSpec::star_satellite(std::uniform_int_distribution<int>(0, 3)(rng));
}

}  // namespace scpm::testing

#endif  // SCPM_TESTS_SUPPORT_HPP
