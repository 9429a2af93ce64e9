// SPDX-License-Identifier: Apache-2.0

#include "scpm/selection.hpp"

#include <algorithm>
#include <string>

#include "scpm/error.hpp"

namespace scpm {

Interestingness parse_interestingness(std::string_view text) {
  if (text == "support" || text == "support_measure") return Interestingness::SupportMeasure;
  if (text == "nodes" || text == "node_count") return Interestingness::NodeCount;
  if (text == "intent" || text == "intent_size") return Interestingness::IntentSize;
  throw ConfigError("unknown interestingness measure '" + std::string(text) + "'");
}

const char* to_string(Interestingness g) {
  switch (g) {
    case Interestingness::SupportMeasure:
      return "support_measure";
    case Interestingness::NodeCount:
      return "node_count";
    case Interestingness::IntentSize:
      return "intent_size";
  }
  return "support_measure";
}

double temporal_jaccard_distance(const TimeNodeSet& a, const TimeNodeSet& b) {
  const Tick inter = a.intersection_measure(b);
  const Tick uni = a.measure() + b.measure() - inter;
  if (uni == 0) throw InputError("temporal Jaccard distance is undefined for two empty sets");
  return static_cast<double>(uni - inter) / static_cast<double>(uni);
}

double interestingness(const PatternSet&, const ClosedPatternRecord& r, Interestingness g) {
  switch (g) {
    case Interestingness::SupportMeasure:
      return static_cast<double>(r.support_measure);
    case Interestingness::NodeCount:
      return static_cast<double>(r.node_count);
    case Interestingness::IntentSize:
      return static_cast<double>(r.intent.count());
  }
  return 0;
}

std::vector<std::size_t> order_by_interestingness(const PatternSet& set, Interestingness g) {
  std::vector<std::size_t> idx(set.records.size());
  std::vector<double> score(idx.size());
  std::vector<std::vector<std::string>> names(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    idx[i] = i;
    score[i] = interestingness(set, set.records[i], g);
    names[i] = set.items.names_of(set.records[i].intent);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) {
    if (score[l] != score[r]) return score[l] > score[r];
    return names[l] < names[r];
  });
  return idx;
}

namespace {

// distance >= beta, evaluated as (|A u B| - |A n B|) >= beta * |A u B| to
// avoid the rounding of 1 - ratio.
bool at_distance_at_least(const TimeNodeSet& a, const TimeNodeSet& b, double beta) {
  const Tick inter = a.intersection_measure(b);
  const Tick uni = a.measure() + b.measure() - inter;
  if (uni == 0) throw InputError("temporal Jaccard distance is undefined for two empty sets");
  return static_cast<double>(uni - inter) >= beta * static_cast<double>(uni);
}

}  // namespace

std::vector<std::size_t> g_beta_select(const PatternSet& set, const SelectionConfig& cfg) {
  if (!(cfg.beta >= 0.0 && cfg.beta <= 1.0)) throw ConfigError("beta must lie in [0, 1]");
  std::vector<std::size_t> kept;
  for (std::size_t i : order_by_interestingness(set, cfg.g)) {
    const auto& cand = set.records[i].support;
    bool admit = true;
    for (std::size_t j : kept) {
      if (!at_distance_at_least(cand, set.records[j].support, cfg.beta)) {
        admit = false;
        break;
      }
    }
    if (admit) kept.push_back(i);
  }
  return kept;
}

PatternSet subset(const PatternSet& set, const std::vector<std::size_t>& indices) {
  PatternSet out;
  out.node_names = set.node_names;
  out.items = set.items;
  for (std::size_t i : indices) {
    out.records.push_back(set.records.at(i));
    out.records.back().parent.reset();
  }
  return out;
}

std::vector<SelectionCount> selection_report(const PatternSet& set, const std::vector<double>& betas,
                                             Interestingness g) {
  std::vector<SelectionCount> out;
  for (double b : betas) {
    const auto kept = g_beta_select(set, {b, g});
    out.push_back({b, kept.size(), set.records.size() - kept.size()});
  }
  return out;
}

}  // namespace scpm
