// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <sstream>

#include "doctest.h"
#include "scpm/error.hpp"
#include "scpm/pattern_io.hpp"
#include "support.hpp"

using namespace scpm;

TEST_CASE("json lines layout") {
  const auto s = testing::load_fixture_stream("example1");
  const auto ctx = testing::load_fixture_context("example1", s);
  auto r = mine(s, ctx, {});
  const PatternSet set = make_pattern_set(s, ctx, std::move(r.records));
  CHECK(to_json_line(set, set.records.front()) ==
        R"({"intent":["a"],"support":{"1":[[0,1]],"2":[[0,1]],"3":[[0,1]]},"support_measure":3,)"
        R"("node_count":3,"depth":0,"below_min_support":false})");
}

TEST_CASE("malformed json lines are rejected with the line number") {
  std::istringstream bad("{\"intent\":[],\"support\":{},\"support_measure\":0,\"node_count\":0}\nnot json\n");
  try {
    read_jsonl(bad, "f.jsonl");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("f.jsonl:2") != std::string::npos);
  }
  std::istringstream inconsistent(
      R"({"intent":["a"],"support":{"u":[[0,2]]},"support_measure":5,"node_count":1})"
      "\n");
  CHECK_THROWS_AS(read_jsonl(inconsistent), InputError);
  std::istringstream empty("");
  CHECK(read_jsonl(empty).records.empty());
}

TEST_CASE("random results survive a write/read round trip") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 100; ++round) {
    const bool directed = round % 2 == 1;
    const auto s = testing::random_stream(rng, directed);
    const auto ctx = testing::random_context(rng, s);
    MinerConfig cfg;
    cfg.core = testing::random_spec(rng, directed);
    auto r = mine(s, ctx, cfg);
    const PatternSet set = make_pattern_set(s, ctx, std::move(r.records));
    std::stringstream buf;
    write_jsonl(set, buf);
    const PatternSet back = read_jsonl(buf);
    REQUIRE(back.records.size() == set.records.size());
    std::stringstream again;
    write_jsonl(back, again);
    CHECK(again.str() == buf.str());
    for (std::size_t i = 0; i < set.records.size(); ++i) {
      CHECK(back.records[i].support_measure == set.records[i].support_measure);
      CHECK(back.items.names_of(back.records[i].intent) == set.items.names_of(set.records[i].intent));
    }
  }
}
