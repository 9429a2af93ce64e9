// SPDX-License-Identifier: Apache-2.0

#include "scpm/cores.hpp"

#include <algorithm>
#include <charconv>

#include "scpm/error.hpp"

namespace scpm {

namespace {

// Instants covered by at least `k` of the given sets (k >= 1).
IntervalSet covered_at_least(const std::vector<IntervalSet>& sets, int k) {
  if (static_cast<int>(sets.size()) < k) return {};
  std::vector<std::pair<Tick, int>> ev;
  for (const IntervalSet& s : sets)
    for (const Interval& iv : s) {
      ev.push_back({iv.begin, +1});
      ev.push_back({iv.end, -1});
    }
  std::sort(ev.begin(), ev.end());
  std::vector<Interval> out;
  int depth = 0;
  Tick open = 0;
  for (std::size_t i = 0; i < ev.size();) {
    const Tick t = ev[i].first;
    const bool was = depth >= k;
    for (; i < ev.size() && ev[i].first == t; ++i) depth += ev[i].second;
    const bool now = depth >= k;
    if (!was && now) open = t;
    if (was && !now) out.push_back({open, t});
  }
  return IntervalSet::from_unsorted(std::move(out));
}

// Dense view of a sparse time-node set, indexed by node id.
std::vector<const IntervalSet*> dense(const TimeNodeSet& x, std::size_t n) {
  std::vector<const IntervalSet*> d(n, nullptr);
  for (const auto& e : x) {
    if (e.node >= n) throw InputError("time-node set mentions an unknown node");
    d[e.node] = &e.times;
  }
  return d;
}

void require_within_presence(const StreamGraph& s, const TimeNodeSet& x) {
  if (!s.presence_set().contains(x))
    throw InputError("time-node set is not contained in the stream's presence W");
}

// Interactions of `v` towards nodes of `other`, clipped to mine(v) and other(u).
struct Clipped {
  NodeId other;
  IntervalSet times;
};

std::vector<Clipped> clipped_adjacency(std::span<const Adjacency> adj, const IntervalSet& mine,
                                       const std::vector<const IntervalSet*>& other) {
  std::vector<Clipped> out;
  for (const Adjacency& a : adj) {
    const IntervalSet* there = other[a.other];
    if (!there) continue;
    IntervalSet t = a.times.intersect(mine).intersect(*there);
    if (!t.empty()) out.push_back({a.other, std::move(t)});
  }
  return out;
}

// One pruning pass of one side of a bi-core: keeps the instants of `side`
// where the node has at least `threshold` neighbors in `opposite`.
TimeNodeSet prune_side(const StreamGraph& s, const TimeNodeSet& side, const TimeNodeSet& opposite,
                       Direction dir, int threshold) {
  if (threshold <= 0) return side;
  const auto opp = dense(opposite, s.node_count());
  std::vector<TimeNodeSet::Entry> kept;
  for (const auto& e : side) {
    auto adj = clipped_adjacency(s.neighbors(e.node, dir), e.times, opp);
    if (static_cast<int>(adj.size()) < threshold) continue;
    std::vector<IntervalSet> sets;
    sets.reserve(adj.size());
    for (auto& c : adj) sets.push_back(std::move(c.times));
    kept.push_back({e.node, covered_at_least(sets, threshold)});
  }
  return TimeNodeSet::from_entries(std::move(kept));
}

std::size_t atom_bound(const StreamGraph& s, const TimeNodeSet& w1, const TimeNodeSet& w2) {
  std::size_t n = 2;
  for (const auto& e : w1) {
    n += 2 * e.times.size();
    for (const Adjacency& adj : s.neighbors(e.node, Direction::Out)) n += 2 * adj.times.size();
  }
  for (const auto& e : w2) {
    n += 2 * e.times.size();
    for (const Adjacency& adj : s.neighbors(e.node, Direction::In)) n += 2 * adj.times.size();
  }
  return n;
}

int parse_int(std::string_view text, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("core spec: invalid " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoreSpec

CoreSpec CoreSpec::parse(std::string_view text) {
  if (text == "identity") return identity();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ConfigError("core spec must be identity, star-sat:K or ha:H,A (got '" +
                      std::string(text) + "')");
  const auto head = text.substr(0, colon);
  const auto tail = text.substr(colon + 1);
  if (head == "star-sat") return star_satellite(parse_int(tail, "k"));
  if (head == "ha") {
    const auto comma = tail.find(',');
    if (comma == std::string_view::npos) throw ConfigError("core spec ha needs H,A");
    return hub_authority(parse_int(tail.substr(0, comma), "h"),
                         parse_int(tail.substr(comma + 1), "a"));
  }
  throw ConfigError("unknown core kind '" + std::string(head) + "'");
}

std::string CoreSpec::to_string() const {
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::StarSatellite:
      return "star-sat:" + std::to_string(k);
    case Kind::HubAuthority:
      return "ha:" + std::to_string(h) + "," + std::to_string(a);
  }
  return "identity";
}

void validate_core(const CoreSpec& spec, bool directed) {
  switch (spec.kind) {
    case CoreSpec::Kind::Identity:
      return;
    case CoreSpec::Kind::StarSatellite:
      if (spec.k < 0) throw ConfigError("star-satellite threshold k must be non-negative");
      if (directed) throw ConfigError("the star-satellite core needs an undirected stream");
      return;
    case CoreSpec::Kind::HubAuthority:
      if (spec.h < 0 || spec.a < 0)
        throw ConfigError("hub-authority thresholds h and a must be non-negative");
      if (!directed) throw ConfigError("the hub-authority core needs a directed stream");
      return;
  }
}

// ---------------------------------------------------------------------------
// Stream cores

BiCoreResult star_satellite_split(const StreamGraph& s, const TimeNodeSet& x, int k) {
  validate_core(CoreSpec::star_satellite(k), s.directed());
  require_within_presence(s, x);
  if (k == 0) return {x, x};

  const auto in_x = dense(x, s.node_count());
  // Degrees only ever drop when the set shrinks, and every member of the
  // star/satellite set keeps the neighbors that made it qualify, so one
  // sweep per node already yields the greatest fixed point.
  std::vector<std::vector<Clipped>> adj(s.node_count());
  std::vector<TimeNodeSet::Entry> stars;
  for (const auto& e : x) {
    adj[e.node] = clipped_adjacency(s.neighbors(e.node), e.times, in_x);
    if (static_cast<int>(adj[e.node].size()) < k) continue;
    std::vector<IntervalSet> sets;
    sets.reserve(adj[e.node].size());
    for (const auto& c : adj[e.node]) sets.push_back(c.times);
    stars.push_back({e.node, covered_at_least(sets, k)});
  }
  TimeNodeSet star_set = TimeNodeSet::from_entries(std::move(stars));
  const auto is_star = dense(star_set, s.node_count());

  std::vector<TimeNodeSet::Entry> sats;
  for (const auto& e : x) {
    std::vector<Interval> parts;
    for (const auto& c : adj[e.node]) {
      if (!is_star[c.other]) continue;
      for (const Interval& iv : c.times.intersect(*is_star[c.other])) parts.push_back(iv);
    }
    if (!parts.empty()) sats.push_back({e.node, IntervalSet::from_unsorted(std::move(parts))});
  }
  return {std::move(star_set), TimeNodeSet::from_entries(std::move(sats))};
}

TimeNodeSet star_satellite_core(const StreamGraph& s, const TimeNodeSet& x, int k) {
  if (k == 0) {
    validate_core(CoreSpec::star_satellite(k), s.directed());
    require_within_presence(s, x);
    return x;
  }
  BiCoreResult r = star_satellite_split(s, x, k);
  return r.left.unite(r.right);
}

BiCoreResult bha_bicore(const StreamGraph& s, const TimeNodeSet& w1, const TimeNodeSet& w2, int h,
                        int a) {
  validate_core(CoreSpec::hub_authority(h, a), s.directed());
  require_within_presence(s, w1);
  require_within_presence(s, w2);
  TimeNodeSet hubs = w1;
  TimeNodeSet auths = w2;
  const std::size_t cap = atom_bound(s, w1, w2);
  for (std::size_t pass = 0;; ++pass) {
    if (pass > cap) throw InvariantError("bi-core fixed point did not converge");
    TimeNodeSet next_hubs = prune_side(s, hubs, auths, Direction::Out, h);
    TimeNodeSet next_auths = prune_side(s, auths, next_hubs, Direction::In, a);
    const bool stable = next_hubs == hubs && next_auths == auths;
    hubs = std::move(next_hubs);
    auths = std::move(next_auths);
    if (stable) break;
  }
  return {std::move(hubs), std::move(auths)};
}

TimeNodeSet ha_core(const StreamGraph& s, const TimeNodeSet& x, int h, int a) {
  BiCoreResult r = bha_bicore(s, x, x, h, a);
  return r.left.unite(r.right);
}

TimeNodeSet apply_core(const CoreSpec& spec, const StreamGraph& s, const TimeNodeSet& x) {
  validate_core(spec, s.directed());
  switch (spec.kind) {
    case CoreSpec::Kind::Identity:
      return x;
    case CoreSpec::Kind::StarSatellite:
      return star_satellite_core(s, x, spec.k);
    case CoreSpec::Kind::HubAuthority:
      return ha_core(s, x, spec.h, spec.a);
  }
  return x;
}

CoreFunction core_function(const CoreSpec& spec, const StreamGraph& s) {
  validate_core(spec, s.directed());
  return [spec, &s](const TimeNodeSet& x) { return apply_core(spec, s, x); };
}

Closure closure(const Pattern& q, const AttributeContext& ctx, const StreamGraph& s,
                const CoreSpec& spec) {
  return closure(q, ctx, s, core_function(spec, s));
}

// ---------------------------------------------------------------------------
// Static cores

namespace {

std::vector<char> membership(const NodeSet& x, std::size_t n) {
  std::vector<char> in(n, 0);
  for (NodeId v : x) {
    if (v >= n) throw InputError("node set mentions an unknown node");
    in[v] = 1;
  }
  return in;
}

std::size_t count_in(const std::vector<NodeId>& adj, const std::vector<char>& in) {
  std::size_t d = 0;
  for (NodeId u : adj) d += in[u];
  return d;
}

}  // namespace

NodeSet static_star_satellite_core(const StaticGraph& g, const NodeSet& x, int k) {
  if (k < 0) throw ConfigError("star-satellite threshold k must be non-negative");
  if (g.directed) throw ConfigError("the star-satellite core needs an undirected graph");
  if (k == 0) return x;
  const auto in = membership(x, g.universe);
  std::vector<char> star(g.universe, 0);
  for (NodeId v : x) star[v] = count_in(g.out[v], in) >= static_cast<std::size_t>(k);
  NodeSet out;
  for (NodeId v : x) {
    bool keep = star[v];
    for (std::size_t i = 0; !keep && i < g.out[v].size(); ++i) keep = in[g.out[v][i]] && star[g.out[v][i]];
    if (keep) out.push_back(v);
  }
  return out;
}

std::pair<NodeSet, NodeSet> static_bha_bicore(const StaticGraph& g, const NodeSet& x1,
                                              const NodeSet& x2, int h, int a) {
  if (h < 0 || a < 0) throw ConfigError("hub-authority thresholds must be non-negative");
  if (!g.directed) throw ConfigError("the hub-authority core needs a directed graph");
  auto hubs = membership(x1, g.universe);
  auto auths = membership(x2, g.universe);
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v = 0; v < g.universe; ++v)
      if (hubs[v] && count_in(g.out[v], auths) < static_cast<std::size_t>(h)) {
        hubs[v] = 0;
        changed = true;
      }
    for (NodeId v = 0; v < g.universe; ++v)
      if (auths[v] && count_in(g.in[v], hubs) < static_cast<std::size_t>(a)) {
        auths[v] = 0;
        changed = true;
      }
  }
  std::pair<NodeSet, NodeSet> out;
  for (NodeId v = 0; v < g.universe; ++v) {
    if (hubs[v]) out.first.push_back(v);
    if (auths[v]) out.second.push_back(v);
  }
  return out;
}

NodeSet static_ha_core(const StaticGraph& g, const NodeSet& x, int h, int a) {
  auto [hubs, auths] = static_bha_bicore(g, x, x, h, a);
  NodeSet out;
  std::set_union(hubs.begin(), hubs.end(), auths.begin(), auths.end(), std::back_inserter(out));
  return out;
}

NodeSet apply_static_core(const CoreSpec& spec, const StaticGraph& g, const NodeSet& x) {
  switch (spec.kind) {
    case CoreSpec::Kind::Identity:
      return x;
    case CoreSpec::Kind::StarSatellite:
      return static_star_satellite_core(g, x, spec.k);
    case CoreSpec::Kind::HubAuthority:
      return static_ha_core(g, x, spec.h, spec.a);
  }
  return x;
}

}  // namespace scpm
