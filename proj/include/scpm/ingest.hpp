// SPDX-License-Identifier: Apache-2.0

#ifndef SCPM_INGEST_HPP
#define SCPM_INGEST_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scpm/stream_graph.hpp"

namespace scpm {

/// One raw record of a link stream. Triples leave `begin` unset; the
/// interaction then covers [time - instant_extension, time).
struct LinkRecord {
  std::optional<double> begin;
  double time = 0;  // end for quadruples, instant for triples
  std::string u;
  std::string v;
};

struct IngestOptions {
  double resolution = 1.0;          // ticks per second
  double instant_extension = 20.0;  // seconds, applied to triples
  bool directed = false;
  std::optional<Interval> horizon;  // in ticks; inferred when unset
};

enum class LinkFormat {
  Auto,           // triples or quadruples, decided per file from the first record
  Triples,        // t u v
  Quadruples,     // b e u v
  Sociopatterns,  // t i j Ci Cj (class columns ignored)
};

/// Seconds to ticks at the given resolution (rounded to nearest).
Tick to_ticks(double seconds, double resolution);

StreamGraph ingest_link_stream(const std::vector<LinkRecord>& records,
                               const IngestOptions& opts,
                               const std::vector<std::pair<std::string, IntervalSet>>& presence = {});

/// Parses a whitespace- or comma-separated link stream; `#` lines are
/// comments. Errors carry `source:line`.
std::vector<LinkRecord> parse_link_records(std::istream& in, LinkFormat format,
                                           const std::string& source = "<input>");
/// Presence file: `node b e` per line, half-open in seconds.
std::vector<std::pair<std::string, IntervalSet>> parse_presence(std::istream& in,
                                                                double resolution,
                                                                const std::string& source = "<input>");

StreamGraph load_link_stream(const std::string& path, LinkFormat format,
                             const IngestOptions& opts,
                             const std::optional<std::string>& presence_path = std::nullopt);

/// Canonical quadruple CSV (`b,e,u,v` in ticks), sorted by node then start.
void export_link_stream(const StreamGraph& s, std::ostream& out);

}  // namespace scpm

#endif  // SCPM_INGEST_HPP
