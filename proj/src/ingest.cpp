// SPDX-License-Identifier: Apache-2.0

#include "scpm/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "scpm/error.hpp"

namespace scpm {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

double parse_number(const std::string& field, const std::string& where) {
  double value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw InputError(where + ": expected a number, got '" + field + "'");
  return value;
}

bool is_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Tick to_ticks(double seconds, double resolution) {
  return static_cast<Tick>(std::llround(seconds * resolution));
}

StreamGraph ingest_link_stream(const std::vector<LinkRecord>& records, const IngestOptions& opts,
                               const std::vector<std::pair<std::string, IntervalSet>>& presence) {
  if (opts.resolution <= 0) throw ConfigError("tick resolution must be positive");
  StreamGraph::Builder b(opts.directed);
  if (opts.horizon) b.set_horizon(*opts.horizon);
  const Tick extension = to_ticks(opts.instant_extension, opts.resolution);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const LinkRecord& r = records[i];
    Interval iv;
    if (r.begin) {
      iv = {to_ticks(*r.begin, opts.resolution), to_ticks(r.time, opts.resolution)};
      if (iv.begin >= iv.end)
        throw InputError("record " + std::to_string(i + 1) + ": empty interval [" +
                         std::to_string(iv.begin) + "," + std::to_string(iv.end) + ")");
    } else {
      if (extension <= 0) throw ConfigError("instant extension must be positive for triples");
      const Tick t = to_ticks(r.time, opts.resolution);
      iv = {t - extension, t};
    }
    if (opts.horizon && (iv.begin < opts.horizon->begin || iv.end > opts.horizon->end))
      throw InputError("record " + std::to_string(i + 1) + ": interval outside the horizon");
    b.add_interaction(r.u, r.v, iv);
  }
  for (const auto& [node, times] : presence) b.add_presence(node, times);
  return b.build();
}

std::vector<LinkRecord> parse_link_records(std::istream& in, LinkFormat format,
                                           const std::string& source) {
  std::vector<LinkRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment(line)) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    std::vector<std::string> f = split_fields(line);
    if (format == LinkFormat::Auto) {
      if (f.size() == 3)
        format = LinkFormat::Triples;
      else if (f.size() == 4)
        format = LinkFormat::Quadruples;
      else
        throw InputError(where + ": expected 3 or 4 columns, got " + std::to_string(f.size()));
    }
    LinkRecord r;
    switch (format) {
      case LinkFormat::Triples:
        if (f.size() != 3)
          throw InputError(where + ": expected 3 columns (t u v), got " + std::to_string(f.size()));
        r.time = parse_number(f[0], where + " column 1");
        r.u = f[1];
        r.v = f[2];
        break;
      case LinkFormat::Quadruples:
        if (f.size() != 4)
          throw InputError(where + ": expected 4 columns (b e u v), got " +
                           std::to_string(f.size()));
        r.begin = parse_number(f[0], where + " column 1");
        r.time = parse_number(f[1], where + " column 2");
        r.u = f[2];
        r.v = f[3];
        break;
      case LinkFormat::Sociopatterns:
        if (f.size() < 3)
          throw InputError(where + ": expected at least 3 columns (t i j ...), got " +
                           std::to_string(f.size()));
        r.time = parse_number(f[0], where + " column 1");
        r.u = f[1];
        r.v = f[2];
        break;
      case LinkFormat::Auto:
        break;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::pair<std::string, IntervalSet>> parse_presence(std::istream& in,
                                                                double resolution,
                                                                const std::string& source) {
  std::vector<std::pair<std::string, IntervalSet>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment(line)) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    auto f = split_fields(line);
    if (f.size() != 3)
      throw InputError(where + ": expected 3 columns (node b e), got " + std::to_string(f.size()));
    const Tick b = to_ticks(parse_number(f[1], where + " column 2"), resolution);
    const Tick e = to_ticks(parse_number(f[2], where + " column 3"), resolution);
    if (b >= e) throw InputError(where + ": empty presence interval");
    out.push_back({f[0], IntervalSet(b, e)});
  }
  return out;
}

StreamGraph load_link_stream(const std::string& path, LinkFormat format, const IngestOptions& opts,
                             const std::optional<std::string>& presence_path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open stream file '" + path + "'");
  auto records = parse_link_records(in, format, path);
  std::vector<std::pair<std::string, IntervalSet>> presence;
  if (presence_path) {
    std::ifstream pin(*presence_path);
    if (!pin) throw InputError("cannot open presence file '" + *presence_path + "'");
    presence = parse_presence(pin, opts.resolution, *presence_path);
  }
  return ingest_link_stream(records, opts, presence);
}

void export_link_stream(const StreamGraph& s, std::ostream& out) {
  for (const auto& [uv, times] : s.pairs())
    for (const Interval& iv : times)
      out << iv.begin << ',' << iv.end << ',' << s.name(uv.first) << ',' << s.name(uv.second)
          << '\n';
}

}  // namespace scpm
