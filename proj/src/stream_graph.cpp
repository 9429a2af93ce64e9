// SPDX-License-Identifier: Apache-2.0

#include "scpm/stream_graph.hpp"

#include <algorithm>
#include <map>

#include "scpm/error.hpp"

namespace scpm {

namespace {

const IntervalSet kNoTimes{};

const Adjacency* find_adjacency(std::span<const Adjacency> list, NodeId other) {
  auto it = std::lower_bound(list.begin(), list.end(), other,
                             [](const Adjacency& a, NodeId n) { return a.other < n; });
  if (it != list.end() && it->other == other) return &*it;
  return nullptr;
}

std::string describe(const std::string& u, const std::string& v, bool directed) {
  return u + (directed ? "->" : "-") + v;
}

}  // namespace

// ---------------------------------------------------------------------------
// StreamGraph

std::optional<NodeId> StreamGraph::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::span<const Adjacency> StreamGraph::neighbors(NodeId v, Direction dir) const {
  if (directed_ && dir == Direction::In) return in_.at(v);
  return out_.at(v);
}

const IntervalSet& StreamGraph::interactions(NodeId u, NodeId v) const {
  if (u >= out_.size()) return kNoTimes;
  const Adjacency* a = find_adjacency(out_[u], v);
  return a ? a->times : kNoTimes;
}

std::size_t StreamGraph::pair_count() const {
  std::size_t n = 0;
  for (const auto& list : out_) n += list.size();
  return directed_ ? n : n / 2;
}

std::vector<std::pair<std::pair<NodeId, NodeId>, IntervalSet>> StreamGraph::pairs() const {
  std::vector<std::pair<std::pair<NodeId, NodeId>, IntervalSet>> out;
  for (NodeId u = 0; u < out_.size(); ++u)
    for (const Adjacency& a : out_[u])
      if (directed_ || u < a.other) out.push_back({{u, a.other}, a.times});
  return out;
}

// ---------------------------------------------------------------------------
// Builder

NodeId StreamGraph::Builder::add_node(std::string_view name) {
  auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<NodeId>(names_.size()));
  if (inserted) {
    names_.emplace_back(name);
    presence_.emplace_back();
    pairs_.emplace_back();
  }
  return it->second;
}

void StreamGraph::Builder::add_interaction(std::string_view u, std::string_view v,
                                           Interval times) {
  if (!directed_ && u == v)
    throw InputError("self-loop on node '" + std::string(u) + "' in an undirected stream");
  const NodeId a = add_node(u);
  const NodeId b = add_node(v);
  add_interaction(a, b, IntervalSet(times.begin, times.end));
}

void StreamGraph::Builder::add_interaction(NodeId u, NodeId v, const IntervalSet& times) {
  if (u >= names_.size() || v >= names_.size()) throw InputError("unknown node id");
  if (!directed_ && u == v)
    throw InputError("self-loop on node '" + names_[u] + "' in an undirected stream");
  if (times.empty()) return;
  if (!directed_ && v < u) std::swap(u, v);
  IntervalSet& slot = pairs_[u][v];
  slot = slot.unite(times);
}

void StreamGraph::Builder::add_presence(std::string_view node, const IntervalSet& times) {
  const NodeId v = add_node(node);
  presence_[v] = presence_[v] ? presence_[v]->unite(times) : times;
}

StreamGraph StreamGraph::Builder::build() const {
  StreamGraph g;
  g.directed_ = directed_;
  g.names_ = names_;
  g.ids_ = ids_;
  const std::size_t n = names_.size();
  g.out_.assign(n, {});
  if (directed_) g.in_.assign(n, {});

  std::vector<IntervalSet> touched(n);
  for (NodeId u = 0; u < n; ++u) {
    // std::map gives deterministic neighbor order
    std::map<NodeId, IntervalSet> sorted(pairs_[u].begin(), pairs_[u].end());
    for (auto& [v, times] : sorted) {
      if (times.empty()) continue;
      g.out_[u].push_back({v, times});
      if (directed_)
        g.in_[v].push_back({u, times});
      else
        g.out_[v].push_back({u, times});
      touched[u] = touched[u].unite(times);
      touched[v] = touched[v].unite(times);
    }
  }
  auto by_other = [](const Adjacency& a, const Adjacency& b) { return a.other < b.other; };
  for (auto& list : g.out_) std::sort(list.begin(), list.end(), by_other);
  for (auto& list : g.in_) std::sort(list.begin(), list.end(), by_other);

  g.presence_.resize(n);
  for (NodeId v = 0; v < n; ++v) g.presence_[v] = presence_[v] ? *presence_[v] : touched[v];

  for (NodeId u = 0; u < n; ++u) {
    for (const Adjacency& a : g.out_[u]) {
      const IntervalSet both = g.presence_[u].intersect(g.presence_[a.other]);
      if (!both.contains(a.times))
        throw InputError("interaction " + describe(names_[u], names_[a.other], directed_) +
                         " at " + a.times.to_string() +
                         " is not covered by the presence of both endpoints");
    }
  }

  if (horizon_) {
    g.horizon_ = *horizon_;
    const IntervalSet bounds(horizon_->begin, horizon_->end);
    for (NodeId v = 0; v < n; ++v)
      if (!bounds.contains(g.presence_[v]))
        throw InputError("node '" + names_[v] + "' is present at " +
                         g.presence_[v].to_string() + ", outside the horizon " +
                         bounds.to_string());
  } else {
    bool any = false;
    for (const IntervalSet& p : g.presence_) {
      if (p.empty()) continue;
      if (!any) {
        g.horizon_ = {p.lower(), p.upper()};
        any = true;
      } else {
        g.horizon_.begin = std::min(g.horizon_.begin, p.lower());
        g.horizon_.end = std::max(g.horizon_.end, p.upper());
      }
    }
  }

  std::vector<TimeNodeSet::Entry> entries;
  for (NodeId v = 0; v < n; ++v) entries.push_back({v, g.presence_[v]});
  g.presence_set_ = TimeNodeSet::from_entries(std::move(entries));
  return g;
}

// ---------------------------------------------------------------------------
// Derived structures

namespace {

std::vector<AdjacencyEvent> events_of(std::span<const Adjacency> list) {
  std::vector<AdjacencyEvent> ev;
  for (const Adjacency& a : list) {
    for (const Interval& iv : a.times) {
      ev.push_back({iv.begin, a.other, +1});
      ev.push_back({iv.end, a.other, -1});
    }
  }
  std::sort(ev.begin(), ev.end(), [](const AdjacencyEvent& x, const AdjacencyEvent& y) {
    if (x.time != y.time) return x.time < y.time;
    if (x.flag != y.flag) return x.flag < y.flag;  // ends before starts
    return x.other < y.other;
  });
  return ev;
}

}  // namespace

AdjacencyEventTable build_event_table(const StreamGraph& s) {
  AdjacencyEventTable table;
  const std::size_t n = s.node_count();
  table.out.resize(n);
  if (s.directed()) table.in.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    table.out[v] = events_of(s.neighbors(v, Direction::Out));
    if (s.directed()) table.in[v] = events_of(s.neighbors(v, Direction::In));
  }
  return table;
}

StreamGraph induced_substream(const StreamGraph& s, const TimeNodeSet& kept) {
  return induced_substream(s, kept, kept);
}

StreamGraph induced_substream(const StreamGraph& s, const TimeNodeSet& sources,
                              const TimeNodeSet& targets) {
  if (!s.presence_set().contains(sources) || !s.presence_set().contains(targets))
    throw InputError("induced substream: time-node set is not contained in W");
  StreamGraph::Builder b(s.directed());
  b.set_horizon(s.horizon());
  for (NodeId v = 0; v < s.node_count(); ++v) b.add_node(s.name(v));
  const TimeNodeSet present = sources.unite(targets);
  for (const auto& e : present) b.add_presence(s.name(e.node), e.times);
  for (const auto& [uv, times] : s.pairs()) {
    const auto [u, v] = uv;
    IntervalSet clipped = times.intersect(sources.at(u)).intersect(targets.at(v));
    if (!s.directed()) {
      // undirected: either endpoint may play either role
      clipped = clipped.unite(times.intersect(sources.at(v)).intersect(targets.at(u)));
      clipped = clipped.intersect(present.at(u)).intersect(present.at(v));
    }
    b.add_interaction(u, v, clipped);
  }
  return b.build();
}

int DegreeProfile::at(Tick t) const {
  auto it = std::upper_bound(steps.begin(), steps.end(), t,
                             [](Tick x, const std::pair<Tick, int>& st) { return x < st.first; });
  if (it == steps.begin()) return 0;
  return std::prev(it)->second;
}

DegreeProfile degree_profile(const StreamGraph& s, NodeId v, Direction dir) {
  if (v >= s.node_count()) throw InputError("degree profile: unknown node id");
  DegreeProfile p;
  const auto ev = events_of(s.neighbors(v, dir));
  int degree = 0;
  for (std::size_t i = 0; i < ev.size();) {
    const Tick t = ev[i].time;
    for (; i < ev.size() && ev[i].time == t; ++i) degree += ev[i].flag;
    if (p.steps.empty() || p.steps.back().second != degree) p.steps.push_back({t, degree});
  }
  return p;
}

DegreeProfile degree_profile(const StreamGraph& s, std::string_view node, Direction dir) {
  auto v = s.find(node);
  if (!v) throw InputError("degree profile: unknown node '" + std::string(node) + "'");
  return degree_profile(s, *v, dir);
}

std::size_t StaticGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& l : out) n += l.size();
  return directed ? n : n / 2;
}

bool StaticGraph::has_edge(NodeId u, NodeId v) const {
  if (u >= out.size()) return false;
  return std::binary_search(out[u].begin(), out[u].end(), v);
}

StaticGraph induced_static_graph(const StreamGraph& s) {
  StaticGraph g;
  g.directed = s.directed();
  g.universe = s.node_count();
  g.out.assign(g.universe, {});
  if (g.directed) g.in.assign(g.universe, {});
  for (NodeId u = 0; u < g.universe; ++u) {
    for (const Adjacency& a : s.neighbors(u, Direction::Out)) {
      if (a.times.empty()) continue;
      g.out[u].push_back(a.other);
      if (g.directed) g.in[a.other].push_back(u);
    }
  }
  for (auto& l : g.in) std::sort(l.begin(), l.end());
  for (NodeId v = 0; v < g.universe; ++v)
    if (!s.presence(v).empty()) g.nodes.push_back(v);
  return g;
}

}  // namespace scpm
