// Copyright 2026 The ssevault Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <tuple>
#include <utility>

#include "ssevault/bench.hpp"

using namespace ssevault;

TEST_CASE("synth_db follows the type ladder") {
  // d = 8 gives 3 access types covering 0..4, 0..2, and 0..1.
  auto db = synth_db(5, 8);
  REQUIRE(db.size() == 5);
  CHECK(db.at("w0") == std::vector<uint32_t>{0, 1, 2, 3, 4});
  CHECK(db.at("w1") == std::vector<uint32_t>{0, 1, 2});
  CHECK(db.at("w2") == std::vector<uint32_t>{0, 1});
  CHECK(db.at("w3") == std::vector<uint32_t>{0, 1, 2, 3, 4});
  CHECK(db.at("w4") == std::vector<uint32_t>{0, 1, 2});

  // A single file collapses everything to one type holding file 0.
  auto tiny = synth_db(3, 1);
  REQUIRE(tiny.size() == 3);
  for (const auto& [kw, ids] : tiny) CHECK(ids == std::vector<uint32_t>{0});

  // The widest type always covers half the corpus.
  auto wide = synth_db(1, 1000);
  REQUIRE(wide.at("w0").size() == 501);
  CHECK(wide.at("w0").front() == 0);
  CHECK(wide.at("w0").back() == 500);

  CHECK(synth_db(5, 8) == db);
  CHECK_THROWS_AS(synth_db(0, 8), std::invalid_argument);
  CHECK_THROWS_AS(synth_db(5, 0), std::invalid_argument);
}

TEST_CASE("synth_pair_count matches the generated dataset") {
  const std::vector<std::pair<size_t, size_t>> grid = {{5, 8}, {3, 1}, {1, 1000}, {16, 100}};
  for (auto [w, d] : grid) {
    auto db = synth_db(w, d);
    size_t total = 0;
    for (const auto& [kw, ids] : db) total += ids.size();
    CAPTURE(w);
    CAPTURE(d);
    CHECK(synth_pair_count(w, d) == total);
  }
  CHECK(synth_pair_count(5, 8) == 18);
  CHECK(synth_pair_count(1000, 1000) == 100400);
}

TEST_CASE("a tiny sweep produces one row per operation") {
  BenchConfig config;
  config.keywords = {4};
  config.files = {8};
  config.clients = {2};
  config.repetitions = 2;
  config.seed = 3;
  config.lambda_q = 64;
  config.lambda_p = 256;

  auto rows = run_bench(config);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].op == "edbgen");
  CHECK(rows[1].op == "search");
  CHECK(rows[2].op == "update");
  CHECK(rows[3].op == "revoke");
  for (const auto& row : rows) {
    CHECK(row.keywords == 4);
    CHECK(row.files == 8);
    CHECK(row.clients == 2);
    CHECK(row.mean_ms >= 0.0);
    CHECK(row.note.empty());
  }
  // edbgen is timed once, so both stats coincide; with two repetitions the
  // p95 is the max of the pair and cannot fall below the mean.
  CHECK(rows[0].mean_ms == rows[0].p95_ms);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].p95_ms >= rows[i].mean_ms);
}

TEST_CASE("a multi-point grid emits rows for every point") {
  BenchConfig config;
  config.keywords = {2, 4};
  config.files = {4};
  config.clients = {1, 2};
  config.repetitions = 1;
  config.seed = 9;
  config.lambda_q = 64;
  config.lambda_p = 256;

  auto rows = run_bench(config);
  REQUIRE(rows.size() == 16);  // 4 grid points x 4 ops
  std::set<std::tuple<size_t, size_t, size_t>> points;
  for (const auto& row : rows) points.insert({row.keywords, row.files, row.clients});
  CHECK(points == std::set<std::tuple<size_t, size_t, size_t>>{
                      {2, 4, 1}, {2, 4, 2}, {4, 4, 1}, {4, 4, 2}});
}

TEST_CASE("stress mode replaces timings with a concurrency sweep") {
  BenchConfig config;
  config.keywords = {3};
  config.files = {8};
  config.clients = {4};
  config.repetitions = 8;
  config.seed = 17;
  config.lambda_q = 64;
  config.lambda_p = 256;
  config.stress = true;

  auto rows = run_bench(config);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].op == "stress-search");
  CHECK(rows[0].mean_ms == 0.0);
  CHECK(rows[0].note.substr(0, 3) == "ok:");
}

TEST_CASE("grid values of zero are rejected") {
  BenchConfig config;
  config.keywords = {0};
  CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
  config = BenchConfig{};
  config.files = {1, 0};
  CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
  config = BenchConfig{};
  config.clients = {0};
  CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
}

TEST_CASE("csv output is stable") {
  std::vector<BenchRow> rows = {
      {"edbgen", 1, 2, 3, 10.0, 10.0, ""},
      {"search", 1, 2, 3, 0.5, 0.75, ""},
      {"stress-search", 4, 2, 3, 0.0, 0.0, "ok: 8 concurrent searches, 2 threads"},
  };
  CHECK(bench_csv(rows) ==
        "op,keywords,files,clients,mean_ms,p95_ms,note\n"
        "edbgen,1,2,3,10.000000,10.000000,\n"
        "search,1,2,3,0.500000,0.750000,\n"
        "stress-search,4,2,3,0.000000,0.000000,ok: 8 concurrent searches, 2 threads\n");
  CHECK(bench_csv({}) == "op,keywords,files,clients,mean_ms,p95_ms,note\n");
}

TEST_CASE("gnuplot output groups rows into per-op blocks") {
  std::vector<BenchRow> rows = {
      {"edbgen", 1, 2, 3, 10.0, 10.0, ""},
      {"search", 1, 2, 3, 0.5, 0.75, ""},
      {"search", 4, 2, 3, 0.25, 0.5, ""},
  };
  CHECK(bench_gnuplot(rows) ==
        "# op=edbgen\n"
        "# keywords files clients mean_ms p95_ms\n"
        "1 2 3 10.000000 10.000000\n"
        "\n\n"
        "# op=search\n"
        "# keywords files clients mean_ms p95_ms\n"
        "1 2 3 0.500000 0.750000\n"
        "4 2 3 0.250000 0.500000\n");
  CHECK(bench_gnuplot({}).empty());
}
