// SPDX-License-Identifier: Apache-2.0
// Exercises libscpm through its C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "scpm/scpm.h"

namespace {

std::string fixture(const std::string& rel) { return std::string(SCPM_FIXTURE_DIR) + "/" + rel; }

std::string text(size_t (*get)(const scpm_patterns*, size_t, char*, size_t), const scpm_patterns* p,
                 size_t i) {
  const size_t n = get(p, i, nullptr, 0);
  std::string s(n + 1, '\0');
  get(p, i, s.data(), s.size());
  s.resize(n);
  return s;
}

struct Loaded {
  scpm_stream* s = nullptr;
  scpm_context* c = nullptr;
  Loaded(const std::string& dir, bool directed = false) {
    scpm_ingest_options opts;
    scpm_ingest_options_init(&opts);
    opts.directed = directed;
    REQUIRE(scpm_stream_load(fixture(dir + "/stream.csv").c_str(), "quadruples", nullptr, &opts, &s) ==
            SCPM_OK);
    REQUIRE(scpm_context_load_csv(s, fixture(dir + "/attributes.csv").c_str(), &c) == SCPM_OK);
  }
  ~Loaded() {
    scpm_context_free(c);
    scpm_stream_free(s);
  }
};

}  // namespace

TEST_CASE("example 1 through the C interface") {
  Loaded in("example1");
  CHECK(scpm_stream_node_count(in.s) == 3);
  CHECK(scpm_stream_pair_count(in.s) == 2);
  CHECK(scpm_context_item_count(in.c) == 4);

  scpm_miner_config cfg;
  scpm_miner_config_init(&cfg);
  cfg.core = "identity";
  scpm_patterns* p = nullptr;
  REQUIRE(scpm_mine(in.s, in.c, &cfg, &p) == SCPM_OK);
  CHECK(scpm_patterns_count(p) == 7);
  CHECK(text(scpm_patterns_intent, p, 0) == "a");
  CHECK(scpm_patterns_support_measure(p, 0) == 3);
  CHECK(scpm_patterns_depth(p, 0) == 0);
  int64_t b = -1, e = -1;
  scpm_patterns_time_span(p, 0, &b, &e);
  CHECK(b == 0);
  CHECK(e == 1);

  std::vector<size_t> order(scpm_patterns_count(p));
  REQUIRE(scpm_patterns_order(p, "support", order.data()) == SCPM_OK);
  CHECK(order[0] == 0);

  scpm_patterns* kept = nullptr;
  REQUIRE(scpm_select(p, 0.0, "support", &kept) == SCPM_OK);
  CHECK(scpm_patterns_count(kept) == 7);
  scpm_patterns_free(kept);
  REQUIRE(scpm_select(p, 1.0, "support", &kept) == SCPM_OK);
  CHECK(scpm_patterns_count(kept) == 1);
  scpm_patterns_free(kept);

  scpm_patterns* big = nullptr;
  REQUIRE(scpm_filter_min_intent(p, 2, &big) == SCPM_OK);
  CHECK(scpm_patterns_count(big) == 6);
  scpm_patterns_free(big);

  const auto path = (std::filesystem::temp_directory_path() / "scpm_capi_test.jsonl").string();
  REQUIRE(scpm_patterns_write_jsonl(p, path.c_str()) == SCPM_OK);
  scpm_patterns* back = nullptr;
  REQUIRE(scpm_patterns_load_jsonl(path.c_str(), &back) == SCPM_OK);
  CHECK(scpm_patterns_count(back) == 7);
  CHECK(text(scpm_patterns_record_json, back, 3) == text(scpm_patterns_record_json, p, 3));
  scpm_patterns_free(back);
  std::remove(path.c_str());
  scpm_patterns_free(p);
}

TEST_CASE("figure 4 comparison through the C interface") {
  Loaded in("figure4");
  scpm_miner_config cfg;
  scpm_miner_config_init(&cfg);
  cfg.core = "star-sat:2";
  scpm_comparison cmp{};
  REQUIRE(scpm_static_compare(in.s, in.c, &cfg, 1, &cmp) == SCPM_OK);
  CHECK(cmp.stream_patterns == 3);
  CHECK(cmp.static_patterns == 4);
  CHECK(cmp.missing_from_static == 0);
}

TEST_CASE("status codes and messages") {
  scpm_stream* s = nullptr;
  CHECK(scpm_stream_load("/nonexistent/stream.csv", "auto", nullptr, nullptr, &s) == SCPM_ERR_INPUT);
  CHECK(s == nullptr);
  CHECK(std::string(scpm_last_error()).find("/nonexistent") != std::string::npos);
  CHECK(scpm_stream_parse("1,3,a,b\n", "bogus", nullptr, &s) == SCPM_ERR_CONFIG);
  CHECK(scpm_stream_parse("1,x,a,b\n", "auto", nullptr, &s) == SCPM_ERR_INPUT);

  REQUIRE(scpm_stream_parse("1,3,a,b\n", "auto", nullptr, &s) == SCPM_OK);
  scpm_context* c = nullptr;
  CHECK(scpm_context_load_hs327(s, nullptr, nullptr, nullptr, nullptr, nullptr, &c) == SCPM_OK);
  CHECK(scpm_context_warning_count(c) == 2);  // neither node has a description
  scpm_miner_config cfg;
  scpm_miner_config_init(&cfg);
  cfg.core = "ha:1,1";
  scpm_patterns* p = nullptr;
  CHECK(scpm_mine(s, c, &cfg, &p) == SCPM_ERR_CONFIG);
  cfg.core = "star-sat:1";
  cfg.min_support = 0;
  CHECK(scpm_mine(s, c, &cfg, &p) == SCPM_ERR_CONFIG);
  CHECK(scpm_mine(nullptr, c, &cfg, &p) == SCPM_ERR_CONFIG);
  CHECK(p == nullptr);

  scpm_patterns* empty = nullptr;
  cfg.min_support = 1;
  REQUIRE(scpm_mine(s, c, &cfg, &empty) == SCPM_OK);
  CHECK(scpm_patterns_support_measure(empty, 99) == 0);
  CHECK(scpm_patterns_intent(empty, 99, nullptr, 0) == 0);
  CHECK(scpm_select(empty, 2.0, "support", &p) == SCPM_ERR_CONFIG);
  scpm_patterns_free(empty);
  scpm_context_free(c);
  scpm_stream_free(s);
  CHECK(std::string(scpm_version()).size() > 0);
}
