// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_PATTERN_IO_HPP
#define SCPM_PATTERN_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "scpm/attributes.hpp"
#include "scpm/miner.hpp"

namespace scpm {

/// Mined records together with the names needed to print them. Node ids in
/// the supports index `node_names`; intents are over `items`.
struct PatternSet {
  std::vector<std::string> node_names;
  ItemUniverse items;
  std::vector<ClosedPatternRecord> records;
};

PatternSet make_pattern_set(const StreamGraph& s, const AttributeContext& ctx,
                            std::vector<ClosedPatternRecord> records);

/// One JSON object per line with fields, in order: intent (item names,
/// sorted), support (node -> [[start, end], ...]), support_measure,
/// node_count, depth, below_min_support.
void write_jsonl(const PatternSet& set, std::ostream& out);
std::string to_json_line(const PatternSet& set, const ClosedPatternRecord& r);

/// Reads what write_jsonl produced. Node and item ids are assigned in order
/// of first appearance. Throws InputError with the line number on bad input.
PatternSet read_jsonl(std::istream& in, const std::string& source = "<input>");
PatternSet load_jsonl(const std::string& path);

}  // namespace scpm

#endif  // SCPM_PATTERN_IO_HPP
