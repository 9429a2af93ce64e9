/* SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface of the scpm library: core closed pattern mining on attributed
 * stream graphs.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an scpm_status; on failure a description of
 * the problem is available from scpm_last_error() on the same thread until
 * the next failing call.
 *
 * Strings are copied out snprintf-style: the functions taking (buf, cap)
 * write at most cap bytes including the terminator and return the full
 * length the string needs, excluding the terminator.
 */

#ifndef SCPM_H
#define SCPM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define SCPM_API __declspec(dllexport)
#else
#  define SCPM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scpm_status {
  SCPM_OK = 0,
  SCPM_ERR_INPUT = 1,     /* unreadable or malformed input */
  SCPM_ERR_CONFIG = 2,    /* invalid parameters */
  SCPM_ERR_INVARIANT = 3, /* internal invariant violated */
  SCPM_ERR_INTERNAL = 4   /* anything else, including allocation failure */
} scpm_status;

typedef struct scpm_stream scpm_stream;
typedef struct scpm_context scpm_context;
typedef struct scpm_patterns scpm_patterns;

SCPM_API const char* scpm_version(void);
SCPM_API const char* scpm_last_error(void);

/* ---- streams ---------------------------------------------------------- */

typedef struct scpm_ingest_options {
  double resolution;        /* ticks per second, default 1 */
  double instant_extension; /* seconds each triple extends backwards, default 20 */
  int directed;             /* non-zero for directed streams */
  int has_horizon;          /* when zero the horizon is inferred */
  int64_t horizon_begin;    /* ticks, half-open */
  int64_t horizon_end;
} scpm_ingest_options;

SCPM_API void scpm_ingest_options_init(scpm_ingest_options* opts);

/* format: "auto", "triples", "quadruples" or "sociopatterns".
 * presence_path may be NULL. */
SCPM_API scpm_status scpm_stream_load(const char* path, const char* format,
                                      const char* presence_path,
                                      const scpm_ingest_options* opts, scpm_stream** out);
/* Same as scpm_stream_load but reads the records from a string. */
SCPM_API scpm_status scpm_stream_parse(const char* text, const char* format,
                                       const scpm_ingest_options* opts, scpm_stream** out);
SCPM_API void scpm_stream_free(scpm_stream* s);

SCPM_API size_t scpm_stream_node_count(const scpm_stream* s);
SCPM_API size_t scpm_stream_pair_count(const scpm_stream* s);
SCPM_API int scpm_stream_directed(const scpm_stream* s);
SCPM_API void scpm_stream_horizon(const scpm_stream* s, int64_t* begin, int64_t* end);
/* Canonical quadruple CSV. */
SCPM_API scpm_status scpm_stream_export(const scpm_stream* s, const char* path);

/* ---- attribute contexts ------------------------------------------------ */

/* `node,item1;item2;...` file bound to the nodes of `s`. */
SCPM_API scpm_status scpm_context_load_csv(const scpm_stream* s, const char* path,
                                           scpm_context** out);
/* High-school dataset adapter; any path may be NULL. */
SCPM_API scpm_status scpm_context_load_hs327(const scpm_stream* s, const char* metadata,
                                             const char* facebook, const char* friendship,
                                             const char* diary, const char* contacts,
                                             scpm_context** out);
SCPM_API void scpm_context_free(scpm_context* c);
SCPM_API size_t scpm_context_item_count(const scpm_context* c);
SCPM_API size_t scpm_context_warning_count(const scpm_context* c);
SCPM_API size_t scpm_context_warning(const scpm_context* c, size_t i, char* buf, size_t cap);

/* ---- mining ------------------------------------------------------------ */

typedef struct scpm_miner_config {
  const char* core;         /* "identity", "star-sat:K" or "ha:H,A" */
  int64_t min_support;      /* > 0, in node-ticks (or nodes, see below) */
  int measure_nodes;        /* non-zero: compare node counts to min_support */
  size_t min_intent_size;   /* drop patterns with fewer items */
  unsigned threads;         /* 0: SCPM_THREADS or 1 */
  int shuffle_items;        /* non-zero: item order drawn from item_seed */
  uint64_t item_seed;
} scpm_miner_config;

SCPM_API void scpm_miner_config_init(scpm_miner_config* cfg);

SCPM_API scpm_status scpm_mine(const scpm_stream* s, const scpm_context* c,
                               const scpm_miner_config* cfg, scpm_patterns** out);
/* Mines the static graph induced by `s` with the static core operators.
 * min_support then counts nodes. */
SCPM_API scpm_status scpm_mine_static(const scpm_stream* s, const scpm_context* c,
                                      const scpm_miner_config* cfg, scpm_patterns** out);

typedef struct scpm_comparison {
  size_t stream_patterns;
  size_t static_patterns;
  size_t missing_from_static; /* stream intents that are not static intents */
} scpm_comparison;

/* Mines both `s` and its induced static graph. Stream patterns use
 * cfg->min_support; static patterns use static_min_support nodes. */
SCPM_API scpm_status scpm_static_compare(const scpm_stream* s, const scpm_context* c,
                                         const scpm_miner_config* cfg,
                                         int64_t static_min_support, scpm_comparison* out);

/* ---- pattern sets ------------------------------------------------------ */

SCPM_API scpm_status scpm_patterns_load_jsonl(const char* path, scpm_patterns** out);
SCPM_API scpm_status scpm_patterns_write_jsonl(const scpm_patterns* p, const char* path);
SCPM_API void scpm_patterns_free(scpm_patterns* p);

SCPM_API size_t scpm_patterns_count(const scpm_patterns* p);
SCPM_API int64_t scpm_patterns_support_measure(const scpm_patterns* p, size_t i);
SCPM_API size_t scpm_patterns_node_count(const scpm_patterns* p, size_t i);
SCPM_API size_t scpm_patterns_intent_size(const scpm_patterns* p, size_t i);
SCPM_API size_t scpm_patterns_depth(const scpm_patterns* p, size_t i);
/* Earliest start and latest end over the support; 0, 0 when empty. */
SCPM_API void scpm_patterns_time_span(const scpm_patterns* p, size_t i, int64_t* begin,
                                      int64_t* end);
/* Item names joined by ", ". */
SCPM_API size_t scpm_patterns_intent(const scpm_patterns* p, size_t i, char* buf, size_t cap);
/* The record's JSON line, without the newline. */
SCPM_API size_t scpm_patterns_record_json(const scpm_patterns* p, size_t i, char* buf,
                                          size_t cap);

/* Mining statistics; zero for sets loaded from disk. */
SCPM_API size_t scpm_patterns_candidates(const scpm_patterns* p);
SCPM_API size_t scpm_patterns_warning_count(const scpm_patterns* p);
SCPM_API size_t scpm_patterns_warning(const scpm_patterns* p, size_t i, char* buf, size_t cap);

/* Indices sorted by decreasing g ("support", "nodes" or "intent"). */
SCPM_API scpm_status scpm_patterns_order(const scpm_patterns* p, const char* g, size_t* indices);

/* g-beta selection; the result keeps the selection order. */
SCPM_API scpm_status scpm_select(const scpm_patterns* p, double beta, const char* g,
                                 scpm_patterns** out);
SCPM_API scpm_status scpm_filter_min_intent(const scpm_patterns* p, size_t n,
                                            scpm_patterns** out);

#ifdef __cplusplus
}
#endif

#endif /* SCPM_H */
