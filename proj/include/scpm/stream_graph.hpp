// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_STREAM_GRAPH_HPP
#define SCPM_STREAM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scpm/interval_set.hpp"
#include "scpm/time_node_set.hpp"

namespace scpm {

/// A neighbor of a node together with the times they interact.
struct Adjacency {
  NodeId other;
  IntervalSet times;
};

enum class Direction { Out, In };

/// Stream graph S = (T, V, W, E): a horizon, named nodes, node presence and
/// timed pairwise interactions. Immutable once built.
///
/// Undirected streams keep one symmetric adjacency list per node. Directed
/// streams keep out- and in-adjacency separately.
class StreamGraph {
 public:
  class Builder;

  StreamGraph() = default;

  bool directed() const { return directed_; }
  Interval horizon() const { return horizon_; }

  std::size_t node_count() const { return names_.size(); }
  const std::string& name(NodeId v) const { return names_.at(v); }
  std::optional<NodeId> find(std::string_view name) const;
  std::span<const std::string> names() const { return names_; }

  const IntervalSet& presence(NodeId v) const { return presence_.at(v); }
  /// W as a time-node set.
  const TimeNodeSet& presence_set() const { return presence_set_; }

  /// Out-neighbors for directed streams, all neighbors otherwise; sorted by id.
  std::span<const Adjacency> neighbors(NodeId v, Direction dir = Direction::Out) const;
  /// Interaction times of the pair (u, v); ordered when directed.
  const IntervalSet& interactions(NodeId u, NodeId v) const;
  /// Number of (unordered, or ordered when directed) pairs with interactions.
  std::size_t pair_count() const;

  bool empty() const { return names_.empty(); }

  /// Pairs (u, v, times) with u < v when undirected, sorted by (u, v).
  std::vector<std::pair<std::pair<NodeId, NodeId>, IntervalSet>> pairs() const;

 private:
  bool directed_ = false;
  Interval horizon_{};
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<IntervalSet> presence_;
  TimeNodeSet presence_set_;
  std::vector<std::vector<Adjacency>> out_;
  std::vector<std::vector<Adjacency>> in_;
};

/// Accumulates nodes, interactions and presence, then validates and freezes
/// them into a StreamGraph.
class StreamGraph::Builder {
 public:
  explicit Builder(bool directed = false) : directed_(directed) {}

  NodeId add_node(std::string_view name);
  /// Unites `times` into the interactions of (u, v). Throws InputError on a
  /// self-loop in an undirected stream.
  void add_interaction(std::string_view u, std::string_view v, Interval times);
  void add_interaction(NodeId u, NodeId v, const IntervalSet& times);
  /// Explicit presence; nodes never given one default to the union of their
  /// interaction times.
  void add_presence(std::string_view node, const IntervalSet& times);
  void set_horizon(Interval horizon) { horizon_ = horizon; }

  /// Throws InputError when an interaction is not covered by both endpoints'
  /// presence or when anything falls outside a declared horizon.
  StreamGraph build() const;

 private:
  bool directed_;
  std::optional<Interval> horizon_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::optional<IntervalSet>> presence_;
  std::vector<std::unordered_map<NodeId, IntervalSet>> pairs_;  // keyed by low endpoint when undirected
};

/// One start (+1) or end (-1) of an interaction seen from a node.
struct AdjacencyEvent {
  Tick time;
  NodeId other;
  int flag;
  friend bool operator==(const AdjacencyEvent&, const AdjacencyEvent&) = default;
};

/// Per-node time-sorted event lists. For directed streams `out` holds events
/// on out-edges and `in` events on in-edges; undirected streams only fill `out`.
struct AdjacencyEventTable {
  std::vector<std::vector<AdjacencyEvent>> out;
  std::vector<std::vector<AdjacencyEvent>> in;
};

AdjacencyEventTable build_event_table(const StreamGraph& s);

/// Substream induced by a time-node subset of W. Interactions are clipped to
/// the retained presence of both endpoints.
StreamGraph induced_substream(const StreamGraph& s, const TimeNodeSet& kept);
/// Directed substream S(W1, W2): interactions from W1 towards W2, presence
/// W1 u W2.
StreamGraph induced_substream(const StreamGraph& s, const TimeNodeSet& sources,
                              const TimeNodeSet& targets);

/// Piecewise-constant degree d_t(v). Each step (t, d) holds from t up to the
/// next step; the degree is 0 before the first step.
struct DegreeProfile {
  std::vector<std::pair<Tick, int>> steps;
  int at(Tick t) const;
};

DegreeProfile degree_profile(const StreamGraph& s, NodeId v, Direction dir = Direction::Out);
DegreeProfile degree_profile(const StreamGraph& s, std::string_view node,
                             Direction dir = Direction::Out);

/// Static graph G_S induced by a stream: an edge wherever the pair interacts
/// at least once. Nodes are those with non-empty presence, isolated ones
/// included. Node ids are shared with the stream it came from.
struct StaticGraph {
  bool directed = false;
  std::size_t universe = 0;           // ids are 0..universe-1
  std::vector<NodeId> nodes;          // V_S, sorted
  std::vector<std::vector<NodeId>> out;  // sorted; symmetric when undirected
  std::vector<std::vector<NodeId>> in;   // directed only

  std::size_t edge_count() const;
  bool has_edge(NodeId u, NodeId v) const;
};

StaticGraph induced_static_graph(const StreamGraph& s);

}  // namespace scpm

#endif  // SCPM_STREAM_GRAPH_HPP
