// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_SELECTION_HPP
#define SCPM_SELECTION_HPP

#include <string_view>
#include <vector>

#include "scpm/pattern_io.hpp"
#include "scpm/time_node_set.hpp"

namespace scpm {

/// Interestingness measure g used to order patterns before selection.
enum class Interestingness { SupportMeasure, NodeCount, IntentSize };

Interestingness parse_interestingness(std::string_view text);
const char* to_string(Interestingness g);

struct SelectionConfig {
  double beta = 0.0;
  Interestingness g = Interestingness::SupportMeasure;
};

/// 1 - |A n B| / |A u B| with |.| the node-tick measure. Throws InputError
/// when both sets are empty.
double temporal_jaccard_distance(const TimeNodeSet& a, const TimeNodeSet& b);

double interestingness(const PatternSet& set, const ClosedPatternRecord& r, Interestingness g);

/// Indices of `set.records` in decreasing g, ties broken by the
/// lexicographic order of the (name-sorted) intents.
std::vector<std::size_t> order_by_interestingness(const PatternSet& set, Interestingness g);

/// Greedy g-beta selection: scan in decreasing g and keep a pattern when its
/// distance to every pattern kept so far is at least beta. Returns indices
/// into `set.records` in kept order.
std::vector<std::size_t> g_beta_select(const PatternSet& set, const SelectionConfig& cfg);

PatternSet subset(const PatternSet& set, const std::vector<std::size_t>& indices);

struct SelectionCount {
  double beta;
  std::size_t kept;
  std::size_t rejected;
};

std::vector<SelectionCount> selection_report(const PatternSet& set, const std::vector<double>& betas,
                                             Interestingness g);

}  // namespace scpm

#endif  // SCPM_SELECTION_HPP
