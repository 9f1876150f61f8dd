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

#include "ssevault/audit.hpp"
#include "ssevault/scenario.hpp"

using namespace ssevault;

namespace {

ChameleonKeyPair test_keys() {
  static const ChameleonKeyPair kp = [] {
    DetRng rng(2026);
    return ch_setup(64, 256, rng);
  }();
  return kp;
}

TranscriptRecord make_rec(uint64_t ts, TranscriptKind kind) {
  TranscriptRecord rec;
  rec.ts = ts;
  rec.kind = kind;
  rec.addr = {0x0a};
  rec.status = WireStatus::kOk;
  if (kind == TranscriptKind::kSearch || kind == TranscriptKind::kUpdate ||
      kind == TranscriptKind::kStore) {
    rec.base = 1;
    rec.cur = ts;
  }
  if (kind == TranscriptKind::kFetch) rec.addr.clear();
  return rec;
}

bool mentions(const LeakageReport& report, const std::string& needle) {
  for (const auto& f : report.offending_fields) {
    if (f.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("well-formed transcripts pass") {
  ShardTranscript shard;
  shard.shard_addr = {0xff};
  shard.records = {
      make_rec(1, TranscriptKind::kStore),
      make_rec(2, TranscriptKind::kSearch),
      make_rec(3, TranscriptKind::kUpdate),
      make_rec(4, TranscriptKind::kRevoke),
      make_rec(5, TranscriptKind::kFetch),
      make_rec(6, TranscriptKind::kSearch),
  };

  std::vector<GroundTruthEvent> truth = {
      {1, "alpha", UpdateOp::kAdd, {1, 2, 3}},
      {3, "alpha", UpdateOp::kDelete, {2}},
  };

  LeakageReport report = audit_leakage({shard}, truth);
  CHECK(report.pass);
  CHECK(report.offending_fields.empty());

  // Leakage profile content.
  CHECK(report.sp.at("0a") == std::vector<uint64_t>{2, 6});
  CHECK(report.updates.at("0a") == std::vector<uint64_t>{3});
  REQUIRE(report.up_hist.at("0a").size() == 1);
  CHECK(report.up_hist.at("0a")[0].second == "op-unknown");

  // TimeDB replays surviving (timestamp, id) pairs from ground truth.
  auto& db = report.time_db.at("alpha");
  REQUIRE(db.size() == 2);
  CHECK(db[0] == std::pair<uint64_t, uint32_t>{1, 1});
  CHECK(db[1] == std::pair<uint64_t, uint32_t>{1, 3});

  CHECK(report.summary().substr(0, 4) == "PASS");
}

TEST_CASE("extra fields are flagged as leakage") {
  ShardTranscript shard;
  shard.shard_addr = {0x01};
  TranscriptRecord rec = make_rec(1, TranscriptKind::kUpdate);
  rec.extras = {{"op", "delete"}, {"ind", "0"}};
  shard.records = {rec};

  LeakageReport report = audit_leakage({shard}, {});
  CHECK_FALSE(report.pass);
  REQUIRE(report.offending_fields.size() == 2);
  CHECK(mentions(report, "'op'"));
  CHECK(mentions(report, "'ind'"));
  CHECK(report.summary().substr(0, 4) == "FAIL");
  CHECK(report.summary().find("'op'") != std::string::npos);
}

TEST_CASE("timestamp regressions are flagged") {
  ShardTranscript shard;
  shard.shard_addr = {0x02};
  shard.records = {make_rec(2, TranscriptKind::kSearch), make_rec(2, TranscriptKind::kSearch),
                   make_rec(1, TranscriptKind::kSearch)};

  LeakageReport report = audit_leakage({shard}, {});
  CHECK_FALSE(report.pass);
  CHECK(report.offending_fields.size() == 2);  // the duplicate and the regression
  CHECK(mentions(report, "ts"));
}

TEST_CASE("fetch records must carry no address") {
  ShardTranscript shard;
  shard.shard_addr = {0x03};
  TranscriptRecord rec = make_rec(1, TranscriptKind::kFetch);
  rec.addr = {0xaa};
  shard.records = {rec};

  LeakageReport report = audit_leakage({shard}, {});
  CHECK_FALSE(report.pass);
  CHECK(mentions(report, "addr"));
}

TEST_CASE("interval on a non-ciphertext operation is flagged") {
  ShardTranscript shard;
  shard.shard_addr = {0x04};
  TranscriptRecord rec = make_rec(1, TranscriptKind::kRevoke);
  rec.base = 1;
  rec.cur = 4;
  shard.records = {rec};

  LeakageReport report = audit_leakage({shard}, {});
  CHECK_FALSE(report.pass);
  CHECK(mentions(report, "interval"));

  // And a backwards interval on a search is structurally invalid.
  ShardTranscript shard2;
  shard2.shard_addr = {0x05};
  TranscriptRecord bad = make_rec(1, TranscriptKind::kSearch);
  bad.base = 5;
  bad.cur = 2;
  shard2.records = {bad};
  CHECK_FALSE(audit_leakage({shard2}, {}).pass);
}

TEST_CASE("unknown record kinds are flagged") {
  ShardTranscript shard;
  shard.shard_addr = {0x06};
  TranscriptRecord rec = make_rec(1, TranscriptKind::kSearch);
  rec.kind = static_cast<TranscriptKind>(99);
  shard.records = {rec};

  LeakageReport report = audit_leakage({shard}, {});
  CHECK_FALSE(report.pass);
  CHECK(mentions(report, "kind"));
}

TEST_CASE("empty inputs pass vacuously") {
  LeakageReport report = audit_leakage({}, {});
  CHECK(report.pass);
  CHECK(report.sp.empty());
  CHECK(report.time_db.empty());
}

TEST_CASE("clean scenario transcripts pass the audit") {
  ScenarioConfig config;
  config.seed = 8;
  config.n_clients = 3;
  config.n_keywords = 4;
  config.n_attributes = 2;
  config.gamma = 10;
  config.n_ops = 50;

  ScenarioHarness harness(config, test_keys());
  REQUIRE(harness.run());
  LeakageReport report = harness.audit();
  CHECK(report.pass);
  CHECK(report.offending_fields.empty());
  CHECK_FALSE(report.sp.empty());

  // Every searched or updated address is one of the real entry addresses.
  std::set<std::string> known;
  for (const auto& s : harness.servers()) {
    for (const auto& [addr, entry] : s->entries()) known.insert(hex_encode(addr));
  }
  for (const auto& [addr, ts] : report.sp) CHECK(known.contains(addr));
  for (const auto& [addr, ts] : report.updates) CHECK(known.contains(addr));
}

TEST_CASE("leaky scenario transcripts fail the audit") {
  ScenarioConfig config;
  config.seed = 8;
  config.n_clients = 3;
  config.n_keywords = 4;
  config.n_attributes = 2;
  config.gamma = 10;
  config.n_ops = 50;
  config.leaky = true;

  ScenarioHarness harness(config, test_keys());
  REQUIRE(harness.run());  // leakage is invisible to the protocol itself
  LeakageReport report = harness.audit();
  CHECK_FALSE(report.pass);
  CHECK(mentions(report, "'op'"));
  CHECK(mentions(report, "'ind'"));
}
