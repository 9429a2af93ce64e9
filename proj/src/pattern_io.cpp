// SPDX-License-Identifier: Apache-2.0

#include "scpm/pattern_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "json.hpp"

#include "scpm/error.hpp"

namespace scpm {

using ojson = nlohmann::ordered_json;

PatternSet make_pattern_set(const StreamGraph& s, const AttributeContext& ctx,
                            std::vector<ClosedPatternRecord> records) {
  PatternSet set;
  set.node_names.assign(s.names().begin(), s.names().end());
  set.items = ctx.universe();
  set.records = std::move(records);
  return set;
}

std::string to_json_line(const PatternSet& set, const ClosedPatternRecord& r) {
  ojson j;
  j["intent"] = set.items.names_of(r.intent);
  ojson support = ojson::object();
  for (const auto& e : r.support) {
    ojson spans = ojson::array();
    for (const Interval& iv : e.times) spans.push_back({iv.begin, iv.end});
    support[set.node_names.at(e.node)] = std::move(spans);
  }
  j["support"] = std::move(support);
  j["support_measure"] = r.support_measure;
  j["node_count"] = r.node_count;
  j["depth"] = r.depth;
  j["below_min_support"] = r.below_min_support;
  return j.dump();
}

void write_jsonl(const PatternSet& set, std::ostream& out) {
  for (const auto& r : set.records) out << to_json_line(set, r) << '\n';
}

PatternSet read_jsonl(std::istream& in, const std::string& source) {
  PatternSet set;
  std::unordered_map<std::string, NodeId> node_ids;
  std::vector<std::vector<std::string>> intents;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    ClosedPatternRecord r;
    try {
      const ojson j = ojson::parse(line);
      std::vector<std::string> names = j.at("intent").get<std::vector<std::string>>();
      for (const auto& n : names) set.items.intern(n);
      intents.push_back(std::move(names));
      std::vector<TimeNodeSet::Entry> entries;
      for (const auto& [node, spans] : j.at("support").items()) {
        auto [it, fresh] = node_ids.try_emplace(node, static_cast<NodeId>(set.node_names.size()));
        if (fresh) set.node_names.push_back(node);
        std::vector<Interval> parts;
        for (const auto& sp : spans) {
          if (!sp.is_array() || sp.size() != 2) throw InputError(where + ": malformed interval");
          parts.push_back({sp[0].get<Tick>(), sp[1].get<Tick>()});
        }
        entries.push_back({it->second, IntervalSet::from_unsorted(std::move(parts))});
      }
      r.support = TimeNodeSet::from_entries(std::move(entries));
      r.support_measure = j.at("support_measure").get<Tick>();
      r.node_count = j.at("node_count").get<std::size_t>();
      if (j.contains("depth")) r.depth = j["depth"].get<std::size_t>();
      if (j.contains("below_min_support")) r.below_min_support = j["below_min_support"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
      throw InputError(where + ": " + e.what());
    }
    if (r.support_measure != r.support.measure() || r.node_count != r.support.node_count())
      throw InputError(where + ": support_measure/node_count disagree with the support");
    set.records.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < set.records.size(); ++i) {
    Pattern p(set.items.size());
    for (const auto& n : intents[i]) p.set(*set.items.find(n));
    set.records[i].intent = std::move(p);
  }
  return set;
}

PatternSet load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open pattern file '" + path + "'");
  return read_jsonl(in, path);
}

}  // namespace scpm
