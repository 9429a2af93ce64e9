// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_CORES_HPP
#define SCPM_CORES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "scpm/attributes.hpp"
#include "scpm/stream_graph.hpp"
#include "scpm/time_node_set.hpp"

namespace scpm {

/// Which interior operator reduces support sets.
struct CoreSpec {
  enum class Kind { Identity, StarSatellite, HubAuthority };

  Kind kind = Kind::Identity;
  int k = 0;  // StarSatellite
  int h = 0;  // HubAuthority: minimum out-degree of hubs
  int a = 0;  // HubAuthority: minimum in-degree of authorities

  static CoreSpec identity() { return {}; }
  static CoreSpec star_satellite(int k) { return {Kind::StarSatellite, k, 0, 0}; }
  static CoreSpec hub_authority(int h, int a) { return {Kind::HubAuthority, 0, h, a}; }

  /// Parses `identity`, `star-sat:K` or `ha:H,A`.
  static CoreSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const CoreSpec&, const CoreSpec&) = default;
};

/// Hubs (or stars) and authorities (or satellites) of a bi-core.
struct BiCoreResult {
  TimeNodeSet left;
  TimeNodeSet right;
};

/// Greatest C within `x` whose members are, in the substream induced by C,
/// either k-stars (degree >= k at t) or neighbors of a k-star at t.
/// Requires an undirected stream and x within W.
TimeNodeSet star_satellite_core(const StreamGraph& s, const TimeNodeSet& x, int k);
/// Same core split into stars and their satellites (which may overlap).
BiCoreResult star_satellite_split(const StreamGraph& s, const TimeNodeSet& x, int k);

/// Greatest pair (H, A) within (w1, w2) such that, in the substream of
/// interactions from H towards A, hubs have out-degree >= h and authorities
/// in-degree >= a. Requires a directed stream.
BiCoreResult bha_bicore(const StreamGraph& s, const TimeNodeSet& w1, const TimeNodeSet& w2, int h,
                        int a);
/// H u A of bha_bicore(s, x, x, h, a).
TimeNodeSet ha_core(const StreamGraph& s, const TimeNodeSet& x, int h, int a);

/// Throws ConfigError when `spec` does not fit the stream's directedness or
/// has negative thresholds.
void validate_core(const CoreSpec& spec, bool directed);
TimeNodeSet apply_core(const CoreSpec& spec, const StreamGraph& s, const TimeNodeSet& x);
CoreFunction core_function(const CoreSpec& spec, const StreamGraph& s);

Closure closure(const Pattern& q, const AttributeContext& ctx, const StreamGraph& s,
                const CoreSpec& spec);

// Static-graph counterparts. Node sets are sorted vectors of ids.
using NodeSet = std::vector<NodeId>;

NodeSet static_star_satellite_core(const StaticGraph& g, const NodeSet& x, int k);
std::pair<NodeSet, NodeSet> static_bha_bicore(const StaticGraph& g, const NodeSet& x1,
                                              const NodeSet& x2, int h, int a);
NodeSet static_ha_core(const StaticGraph& g, const NodeSet& x, int h, int a);
NodeSet apply_static_core(const CoreSpec& spec, const StaticGraph& g, const NodeSet& x);

}  // namespace scpm

#endif  // SCPM_CORES_HPP
