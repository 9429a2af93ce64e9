// SPDX-License-Identifier: Apache-2.0

#include "scpm/scpm.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <fstream>
#include <new>
#include <random>
#include <sstream>
#include <string>

#include "scpm/attributes.hpp"
#include "scpm/cores.hpp"
#include "scpm/error.hpp"
#include "scpm/ingest.hpp"
#include "scpm/miner.hpp"
#include "scpm/pattern_io.hpp"
#include "scpm/selection.hpp"
#include "scpm/stream_graph.hpp"

struct scpm_stream {
  scpm::StreamGraph graph;
};

struct scpm_context {
  scpm::AttributeContext ctx;
  std::vector<std::string> warnings;
};

struct scpm_patterns {
  scpm::PatternSet set;
  scpm::MineStats stats;
  std::vector<std::string> warnings;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
scpm_status guarded(Fn&& fn) {
  try {
    fn();
    return SCPM_OK;
  } catch (const scpm::InputError& e) {
    g_last_error = e.what();
    return SCPM_ERR_INPUT;
  } catch (const scpm::ConfigError& e) {
    g_last_error = e.what();
    return SCPM_ERR_CONFIG;
  } catch (const scpm::InvariantError& e) {
    g_last_error = e.what();
    return SCPM_ERR_INVARIANT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SCPM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SCPM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SCPM_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw scpm::ConfigError(std::string("null argument: ") + what);
}

size_t copy_out(const std::string& s, char* buf, size_t cap) {
  if (buf && cap > 0) {
    const size_t n = std::min(s.size(), cap - 1);
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return s.size();
}

scpm::LinkFormat parse_format(const char* format) {
  const std::string f = format ? format : "auto";
  if (f == "auto") return scpm::LinkFormat::Auto;
  if (f == "triples") return scpm::LinkFormat::Triples;
  if (f == "quadruples") return scpm::LinkFormat::Quadruples;
  if (f == "sociopatterns") return scpm::LinkFormat::Sociopatterns;
  throw scpm::ConfigError("unknown stream format '" + f + "'");
}

scpm::IngestOptions to_options(const scpm_ingest_options* o) {
  scpm_ingest_options d;
  scpm_ingest_options_init(&d);
  if (!o) o = &d;
  scpm::IngestOptions opts;
  opts.resolution = o->resolution;
  opts.instant_extension = o->instant_extension;
  opts.directed = o->directed != 0;
  if (o->has_horizon) opts.horizon = scpm::Interval{o->horizon_begin, o->horizon_end};
  return opts;
}

// Fisher-Yates driven by mt19937_64 directly so the permutation does not
// depend on the standard library's shuffle.
std::vector<scpm::ItemIndex> seeded_order(std::size_t n, std::uint64_t seed) {
  std::vector<scpm::ItemIndex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<scpm::ItemIndex>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

scpm::MinerConfig to_config(const scpm_miner_config* c, const scpm::AttributeContext& ctx) {
  scpm_miner_config d;
  scpm_miner_config_init(&d);
  if (!c) c = &d;
  scpm::MinerConfig cfg;
  cfg.core = scpm::CoreSpec::parse(c->core ? c->core : "identity");
  cfg.min_support = c->min_support;
  cfg.measure = c->measure_nodes ? scpm::SupportMeasure::Nodes : scpm::SupportMeasure::Duration;
  cfg.min_intent_size = c->min_intent_size;
  cfg.threads = c->threads;
  if (c->shuffle_items) cfg.item_order = seeded_order(ctx.item_count(), c->item_seed);
  return cfg;
}

const scpm::ClosedPatternRecord* record(const scpm_patterns* p, size_t i) {
  if (!p || i >= p->set.records.size()) return nullptr;
  return &p->set.records[i];
}

}  // namespace

extern "C" {

const char* scpm_version(void) { return "1.0.0"; }

const char* scpm_last_error(void) { return g_last_error.c_str(); }

void scpm_ingest_options_init(scpm_ingest_options* opts) {
  if (!opts) return;
  opts->resolution = 1.0;
  opts->instant_extension = 20.0;
  opts->directed = 0;
  opts->has_horizon = 0;
  opts->horizon_begin = 0;
  opts->horizon_end = 0;
}

scpm_status scpm_stream_load(const char* path, const char* format, const char* presence_path,
                             const scpm_ingest_options* opts, scpm_stream** out) {
  return guarded([&] {
    require(path && out, "path/out");
    *out = nullptr;
    std::optional<std::string> presence;
    if (presence_path) presence = presence_path;
    auto g = scpm::load_link_stream(path, parse_format(format), to_options(opts), presence);
    *out = new scpm_stream{std::move(g)};
  });
}

scpm_status scpm_stream_parse(const char* text, const char* format,
                              const scpm_ingest_options* opts, scpm_stream** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = nullptr;
    std::istringstream in(text);
    auto records = scpm::parse_link_records(in, parse_format(format));
    *out = new scpm_stream{scpm::ingest_link_stream(records, to_options(opts))};
  });
}

void scpm_stream_free(scpm_stream* s) { delete s; }

size_t scpm_stream_node_count(const scpm_stream* s) { return s ? s->graph.node_count() : 0; }
size_t scpm_stream_pair_count(const scpm_stream* s) { return s ? s->graph.pair_count() : 0; }
int scpm_stream_directed(const scpm_stream* s) { return s && s->graph.directed() ? 1 : 0; }

void scpm_stream_horizon(const scpm_stream* s, int64_t* begin, int64_t* end) {
  const scpm::Interval h = s ? s->graph.horizon() : scpm::Interval{};
  if (begin) *begin = h.begin;
  if (end) *end = h.end;
}

scpm_status scpm_stream_export(const scpm_stream* s, const char* path) {
  return guarded([&] {
    require(s && path, "stream/path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw scpm::InputError(std::string("cannot write '") + path + "'");
    scpm::export_link_stream(s->graph, out);
  });
}

scpm_status scpm_context_load_csv(const scpm_stream* s, const char* path, scpm_context** out) {
  return guarded([&] {
    require(s && path && out, "stream/path/out");
    *out = nullptr;
    auto c = std::make_unique<scpm_context>();
    c->ctx = scpm::AttributeContext::bind(scpm::load_attribute_csv(path), s->graph, &c->warnings);
    *out = c.release();
  });
}

scpm_status scpm_context_load_hs327(const scpm_stream* s, const char* metadata,
                                    const char* facebook, const char* friendship,
                                    const char* diary, const char* contacts, scpm_context** out) {
  return guarded([&] {
    require(s && out, "stream/out");
    *out = nullptr;
    auto opt = [](const char* p) { return p ? std::optional<std::string>(p) : std::nullopt; };
    scpm::Hs327Sources src{opt(metadata), opt(facebook), opt(friendship), opt(diary), opt(contacts)};
    auto c = std::make_unique<scpm_context>();
    c->ctx = scpm::AttributeContext::bind(scpm::load_hs327_attributes(src), s->graph, &c->warnings);
    *out = c.release();
  });
}

void scpm_context_free(scpm_context* c) { delete c; }
size_t scpm_context_item_count(const scpm_context* c) { return c ? c->ctx.item_count() : 0; }
size_t scpm_context_warning_count(const scpm_context* c) { return c ? c->warnings.size() : 0; }

size_t scpm_context_warning(const scpm_context* c, size_t i, char* buf, size_t cap) {
  if (!c || i >= c->warnings.size()) return copy_out("", buf, cap);
  return copy_out(c->warnings[i], buf, cap);
}

void scpm_miner_config_init(scpm_miner_config* cfg) {
  if (!cfg) return;
  cfg->core = "identity";
  cfg->min_support = 1;
  cfg->measure_nodes = 0;
  cfg->min_intent_size = 0;
  cfg->threads = 0;
  cfg->shuffle_items = 0;
  cfg->item_seed = 0;
}

scpm_status scpm_mine(const scpm_stream* s, const scpm_context* c, const scpm_miner_config* cfg,
                      scpm_patterns** out) {
  return guarded([&] {
    require(s && c && out, "stream/context/out");
    *out = nullptr;
    auto result = scpm::mine(s->graph, c->ctx, to_config(cfg, c->ctx));
    auto p = std::make_unique<scpm_patterns>();
    p->set = scpm::make_pattern_set(s->graph, c->ctx, std::move(result.records));
    p->stats = std::move(result.stats);
    p->warnings = std::move(result.warnings);
    *out = p.release();
  });
}

scpm_status scpm_mine_static(const scpm_stream* s, const scpm_context* c,
                             const scpm_miner_config* cfg, scpm_patterns** out) {
  return guarded([&] {
    require(s && c && out, "stream/context/out");
    *out = nullptr;
    scpm::MinerConfig mc = to_config(cfg, c->ctx);
    mc.measure = scpm::SupportMeasure::Nodes;
    auto result = scpm::mine_static(scpm::induced_static_graph(s->graph), c->ctx, mc);
    auto p = std::make_unique<scpm_patterns>();
    p->set = scpm::make_pattern_set(s->graph, c->ctx, std::move(result.records));
    p->stats = std::move(result.stats);
    p->warnings = std::move(result.warnings);
    *out = p.release();
  });
}

scpm_status scpm_static_compare(const scpm_stream* s, const scpm_context* c,
                                const scpm_miner_config* cfg, int64_t static_min_support,
                                scpm_comparison* out) {
  return guarded([&] {
    require(s && c && out, "stream/context/out");
    auto cmp = scpm::compare_with_static(s->graph, c->ctx, to_config(cfg, c->ctx),
                                         static_min_support);
    auto frequent = [](const scpm::MineResult& r) {
      return static_cast<size_t>(std::count_if(r.records.begin(), r.records.end(),
                                               [](const auto& x) { return !x.below_min_support; }));
    };
    out->stream_patterns = frequent(cmp.stream);
    out->static_patterns = frequent(cmp.static_graph);
    out->missing_from_static = cmp.missing_from_static.size();
  });
}

scpm_status scpm_patterns_load_jsonl(const char* path, scpm_patterns** out) {
  return guarded([&] {
    require(path && out, "path/out");
    *out = nullptr;
    auto p = std::make_unique<scpm_patterns>();
    p->set = scpm::load_jsonl(path);
    *out = p.release();
  });
}

scpm_status scpm_patterns_write_jsonl(const scpm_patterns* p, const char* path) {
  return guarded([&] {
    require(p && path, "patterns/path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw scpm::InputError(std::string("cannot write '") + path + "'");
    scpm::write_jsonl(p->set, out);
  });
}

void scpm_patterns_free(scpm_patterns* p) { delete p; }

size_t scpm_patterns_count(const scpm_patterns* p) { return p ? p->set.records.size() : 0; }

int64_t scpm_patterns_support_measure(const scpm_patterns* p, size_t i) {
  const auto* r = record(p, i);
  return r ? r->support_measure : 0;
}

size_t scpm_patterns_node_count(const scpm_patterns* p, size_t i) {
  const auto* r = record(p, i);
  return r ? r->node_count : 0;
}

size_t scpm_patterns_intent_size(const scpm_patterns* p, size_t i) {
  const auto* r = record(p, i);
  return r ? r->intent.count() : 0;
}

size_t scpm_patterns_depth(const scpm_patterns* p, size_t i) {
  const auto* r = record(p, i);
  return r ? r->depth : 0;
}

void scpm_patterns_time_span(const scpm_patterns* p, size_t i, int64_t* begin, int64_t* end) {
  int64_t lo = 0, hi = 0;
  bool any = false;
  if (const auto* r = record(p, i)) {
    for (const auto& e : r->support) {
      lo = any ? std::min(lo, e.times.lower()) : e.times.lower();
      hi = any ? std::max(hi, e.times.upper()) : e.times.upper();
      any = true;
    }
  }
  if (begin) *begin = lo;
  if (end) *end = hi;
}

size_t scpm_patterns_intent(const scpm_patterns* p, size_t i, char* buf, size_t cap) {
  const auto* r = record(p, i);
  if (!r) return copy_out("", buf, cap);
  std::string joined;
  for (const auto& n : p->set.items.names_of(r->intent)) {
    if (!joined.empty()) joined += ", ";
    joined += n;
  }
  return copy_out(joined, buf, cap);
}

size_t scpm_patterns_record_json(const scpm_patterns* p, size_t i, char* buf, size_t cap) {
  const auto* r = record(p, i);
  if (!r) return copy_out("", buf, cap);
  try {
    return copy_out(scpm::to_json_line(p->set, *r), buf, cap);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return copy_out("", buf, cap);
  }
}

size_t scpm_patterns_candidates(const scpm_patterns* p) { return p ? p->stats.candidates : 0; }
size_t scpm_patterns_warning_count(const scpm_patterns* p) { return p ? p->warnings.size() : 0; }

size_t scpm_patterns_warning(const scpm_patterns* p, size_t i, char* buf, size_t cap) {
  if (!p || i >= p->warnings.size()) return copy_out("", buf, cap);
  return copy_out(p->warnings[i], buf, cap);
}

scpm_status scpm_patterns_order(const scpm_patterns* p, const char* g, size_t* indices) {
  return guarded([&] {
    require(p && indices, "patterns/indices");
    const auto order =
        scpm::order_by_interestingness(p->set, scpm::parse_interestingness(g ? g : "support"));
    std::copy(order.begin(), order.end(), indices);
  });
}

scpm_status scpm_select(const scpm_patterns* p, double beta, const char* g, scpm_patterns** out) {
  return guarded([&] {
    require(p && out, "patterns/out");
    *out = nullptr;
    scpm::SelectionConfig cfg{beta, scpm::parse_interestingness(g ? g : "support")};
    auto kept = scpm::g_beta_select(p->set, cfg);
    auto r = std::make_unique<scpm_patterns>();
    r->set = scpm::subset(p->set, kept);
    *out = r.release();
  });
}

scpm_status scpm_filter_min_intent(const scpm_patterns* p, size_t n, scpm_patterns** out) {
  return guarded([&] {
    require(p && out, "patterns/out");
    *out = nullptr;
    auto r = std::make_unique<scpm_patterns>();
    r->set.node_names = p->set.node_names;
    r->set.items = p->set.items;
    r->set.records = scpm::filter_min_intent(p->set.records, n);
    *out = r.release();
  });
}

}  // extern "C"
