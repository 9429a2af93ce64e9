// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_MINER_HPP
#define SCPM_MINER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scpm/attributes.hpp"
#include "scpm/cores.hpp"
#include "scpm/pattern.hpp"
#include "scpm/stream_graph.hpp"
#include "scpm/time_node_set.hpp"

namespace scpm {

/// How |X| is measured when comparing a support set to the minimum support.
enum class SupportMeasure { Duration, Nodes };

struct MinerConfig {
  CoreSpec core;
  Tick min_support = 1;
  SupportMeasure measure = SupportMeasure::Duration;
  std::size_t min_intent_size = 0;
  /// Enumeration order of the items; empty means universe order.
  std::vector<ItemIndex> item_order;
  /// Worker threads for candidate evaluation; 0 reads SCPM_THREADS (default 1).
  unsigned threads = 0;
};

/// A core closed pattern with its core support set.
struct ClosedPatternRecord {
  Pattern intent;
  TimeNodeSet support;
  Tick support_measure = 0;  // node-ticks
  std::size_t node_count = 0;
  std::optional<ItemIndex> parent_item;  // item whose addition produced it
  std::optional<std::size_t> parent;     // index of the parent record
  std::size_t depth = 0;
  /// Only the root can be emitted below the minimum support.
  bool below_min_support = false;
};

struct MineStats {
  std::size_t candidates = 0;     // core computations on extensions
  std::size_t tree_edges = 0;     // (parent, item) edges that produced a record
  std::map<std::size_t, std::size_t> per_depth;
};

struct MineResult {
  std::vector<ClosedPatternRecord> records;
  MineStats stats;
  std::vector<std::string> warnings;
};

/// Depth-first enumeration of all core closed patterns whose support
/// measure reaches cfg.min_support, each exactly once, root first.
MineResult mine(const StreamGraph& s, const AttributeContext& ctx, const MinerConfig& cfg);

/// Same enumeration on the induced static graph, with cfg.core evaluated by
/// the static core operators. Supports are reported with every node present
/// on [0, 1), so support_measure equals node_count.
MineResult mine_static(const StaticGraph& g, const AttributeContext& ctx, const MinerConfig& cfg);

/// Lower-level entry point: enumerate closed patterns of `root` (the object
/// set W) under an arbitrary interior operator.
MineResult enumerate_closed(const TimeNodeSet& root, const CoreFunction& core,
                            const AttributeContext& ctx, const MinerConfig& cfg);

TimeNodeSet lift_nodes(const NodeSet& nodes);
NodeSet nodes_of(const TimeNodeSet& x);

/// Stream patterns next to the patterns of the induced static graph mined
/// with the same core parameters.
struct StaticComparison {
  MineResult stream;
  MineResult static_graph;
  /// Frequent stream intents that are not static closed intents.
  std::vector<Pattern> missing_from_static;
};

StaticComparison compare_with_static(const StreamGraph& s, const AttributeContext& ctx,
                                     const MinerConfig& cfg, Tick static_min_support = 1);

std::map<std::size_t, std::size_t> count_by_intent_size(const std::vector<ClosedPatternRecord>& r);
std::vector<ClosedPatternRecord> filter_min_intent(const std::vector<ClosedPatternRecord>& r,
                                                   std::size_t n);

unsigned resolve_thread_count(unsigned requested);

}  // namespace scpm

#endif  // SCPM_MINER_HPP
