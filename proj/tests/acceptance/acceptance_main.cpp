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

// Release gate: every project-level guarantee checked end to end, one
// pass/fail line per criterion. Exits nonzero if anything fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssevault/bench.hpp"
#include "ssevault/bignum.hpp"
#include "ssevault/persist.hpp"
#include "ssevault/scenario.hpp"

using namespace ssevault;

namespace {

const ChameleonKeyPair& shared_keys() {
  static const ChameleonKeyPair kp = [] {
    DetRng rng(2026);
    return ch_setup(128, 512, rng);
  }();
  return kp;
}

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return buf;
}

// ---------------------------------------------------------------------------
// Criteria 1 and 6 share one corpus: 1000 seeded scenarios with randomized
// dimensions, each verified op by op against the plaintext oracle and then
// fed through the leakage audit.

struct CorpusResult {
  size_t scenarios = 0;
  size_t mismatches = 0;
  size_t audit_failures = 0;
  size_t searches = 0;
  size_t deletion_checks = 0;
  std::string first_error;
};

const CorpusResult& corpus() {
  static const CorpusResult result = [] {
    CorpusResult r;
    DetRng meta(20260814);
    for (size_t i = 0; i < 1000; ++i) {
      ScenarioConfig config;
      config.seed = meta.u64();
      config.n_clients = 1 + static_cast<size_t>(meta.u64_below(8));
      config.n_keywords = 1 + static_cast<size_t>(meta.u64_below(16));
      config.n_attributes = 1 + static_cast<size_t>(meta.u64_below(config.n_keywords));
      config.gamma = 1 + static_cast<size_t>(meta.u64_below(64));
      config.n_ops = static_cast<size_t>(meta.u64_below(201));
      ScenarioOutcome out = run_scenario(config, shared_keys());
      ++r.scenarios;
      if (!out.ok) {
        ++r.mismatches;
        if (r.first_error.empty()) {
          r.first_error = "seed " + std::to_string(config.seed) + ": " + out.error;
        }
      }
      if (!out.audit_pass) ++r.audit_failures;
      r.searches += out.stats.searches;
      r.deletion_checks += out.stats.deletion_checks;
    }
    return r;
  }();
  return result;
}

bool criterion_oracle(std::string& detail) {
  const CorpusResult& r = corpus();
  if (r.mismatches != 0) {
    detail = std::to_string(r.mismatches) + " of " + std::to_string(r.scenarios) +
             " scenarios diverged; first: " + r.first_error;
    return false;
  }
  if (r.searches == 0 || r.deletion_checks == 0) {
    detail = "corpus exercised no searches or no deletions";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 2: one 8-client deployment, every non-empty remaining set.

bool criterion_revocation(std::string& detail) {
  Bulletin bulletin;
  OwnerConfig oc;
  oc.lambda_q = 128;
  oc.lambda_p = 512;
  oc.gamma = 8;
  oc.clients = {1, 2, 3, 4, 5, 6, 7, 8};
  oc.attribute_of["kw"] = "att0";
  DetRng rng(77);
  Owner owner = Owner::init(std::move(oc), rng, shared_keys());
  owner.publish_enrollment(bulletin);

  const std::vector<uint32_t> files = {0, 2, 5};
  auto shards = owner.build_edb({{"kw", files}}, bulletin);
  StorageServer server(shards.at(0).shard_addr, owner.evaluator());
  for (const auto& [addr, r, e] : shards.at(0).entries) {
    if (server.store_entry(addr, r, e) != WireStatus::kOk) {
      detail = "seeding the shard failed";
      return false;
    }
  }
  InprocTransport transport;
  transport.attach(&server);
  owner.authorize("kw", {1, 2, 3, 4, 5, 6, 7, 8}, bulletin);

  const Label16 label = owner.keyword_label("kw");
  const mpz_class addr0 = owner.epoch("kw").addr;
  const Bytes entry_addr = std::get<0>(shards.at(0).entries.at(0));

  std::map<uint32_t, Client> clients;
  for (uint32_t id = 1; id <= 8; ++id) {
    auto [it, inserted] =
        clients.emplace(id, Client(owner.credentials_for(id), owner.evaluator()));
    if (!inserted || !it->second.recover_pathkey(bulletin)) {
      detail = "client " + std::to_string(id) + " failed to enroll";
      return false;
    }
    SearchResult res = it->second.search(transport, bulletin, label);
    if (res.status != SearchResult::Status::kFound || res.file_ids != files) {
      detail = "warm-up search failed for client " + std::to_string(id);
      return false;
    }
  }

  for (uint32_t mask = 1; mask < 256; ++mask) {
    std::set<uint32_t> remaining;
    for (uint32_t id = 1; id <= 8; ++id) {
      if (mask & (1u << (id - 1))) remaining.insert(id);
    }
    RevokeOutput out = owner.revoke("kw", remaining, bulletin);
    if (out.swap.addr != entry_addr || owner.epoch("kw").addr != addr0) {
      detail = "map address changed at mask " + std::to_string(mask);
      return false;
    }
    auto st = remote_swap(transport, server.address(), out.swap.addr,
                          mpz_to_bytes(out.swap.r_new));
    if (!st || *st != WireStatus::kOk) {
      detail = "randomizer swap rejected at mask " + std::to_string(mask);
      return false;
    }
    for (auto& [id, client] : clients) {
      SearchResult res = client.search(transport, bulletin, label);
      bool member = remaining.contains(id);
      if (member && (res.status != SearchResult::Status::kFound || res.file_ids != files)) {
        detail = "remaining client " + std::to_string(id) + " failed at mask " +
                 std::to_string(mask);
        return false;
      }
      if (!member && res.status != SearchResult::Status::kRejected) {
        detail = "revoked client " + std::to_string(id) + " not rejected at mask " +
                 std::to_string(mask);
        return false;
      }
    }
  }

  if (server.entries().size() != 1 || !server.entries().contains(entry_addr)) {
    detail = "shard entry address drifted";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 3: hand-checked tiny vectors plus bulk forged collisions at full
// parameter size.

bool criterion_chameleon(std::string& detail) {
  ChameleonParams tiny{23, 11, 2, 8};
  ChameleonTrapdoor td{3};
  if (!ch_validate(tiny, td)) {
    detail = "tiny parameters rejected";
    return false;
  }
  if (ch_hash(tiny, 5, 2) != 1) {
    detail = "tiny hash vector mismatch";
    return false;
  }
  mpz_class r2 = ch_forge(tiny, td, 5, 7, 2);
  if (r2 != 5 || ch_hash(tiny, 7, r2) != 1) {
    detail = "tiny forge vector mismatch";
    return false;
  }

  DetRng rng(160);
  ChameleonKeyPair kp = ch_setup(160, 1024, rng);
  if (mpz_sizeinbase(kp.params.q.get_mpz_t(), 2) != 160 ||
      mpz_sizeinbase(kp.params.p.get_mpz_t(), 2) != 1024) {
    detail = "generated parameters have wrong bit lengths";
    return false;
  }
  for (int i = 0; i < 10000; ++i) {
    mpz_class x = sample_scalar(rng, kp.params.q);
    mpz_class r = sample_scalar(rng, kp.params.q);
    mpz_class x2 = sample_scalar(rng, kp.params.q);
    mpz_class rf = ch_forge(kp.params, kp.trapdoor, x, x2, r);
    if (ch_hash(kp.params, x, r) != ch_hash(kp.params, x2, rf)) {
      detail = "forged collision failed at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 4: fold chains against a brute-force XOR oracle.

bool criterion_ashe(std::string& detail) {
  DetRng rng(4);
  for (int i = 0; i < 10000; ++i) {
    AsheKey key{PrfKey::from_bytes(rng.bytes(16))};
    size_t nbits = 1 + static_cast<size_t>(rng.u64_below(64));
    size_t chain = 1 + static_cast<size_t>(rng.u64_below(64));
    uint64_t start = 1 + rng.u64_below(uint64_t{1} << 40);

    BitString oracle(nbits);
    std::optional<StatefulCiphertext> sum;
    for (size_t j = 0; j < chain; ++j) {
      BitString m = BitString::from_bytes(rng.bytes((nbits + 7) / 8), nbits);
      oracle = oracle ^ m;
      StatefulCiphertext ct = ashe_encrypt(key, m, start + j);
      sum = sum ? ashe_add(*sum, ct) : ct;
    }
    if (sum->base != start || sum->cur != start + chain - 1 ||
        ashe_decrypt(key, *sum) != oracle) {
      detail = "fold chain diverged from oracle at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 5: the worked bitmap example, end to end through encryption,
// server-side folding, and client decryption.

bool criterion_bitmap(std::string& detail) {
  Bulletin bulletin;
  OwnerConfig oc;
  oc.lambda_q = 128;
  oc.lambda_p = 512;
  oc.gamma = 6;
  oc.clients = {1};
  oc.attribute_of = {{"kwadd", "att0"}, {"kwdel", "att0"}};
  DetRng rng(35);
  Owner owner = Owner::init(std::move(oc), rng, shared_keys());
  owner.publish_enrollment(bulletin);
  auto shards = owner.build_edb({{"kwdel", {0, 3, 5}}, {"kwadd", {0, 2, 4}}}, bulletin);
  StorageServer server(shards.at(0).shard_addr, owner.evaluator());
  for (const auto& [addr, r, e] : shards.at(0).entries) server.store_entry(addr, r, e);
  InprocTransport transport;
  transport.attach(&server);
  owner.authorize("kwdel", {1}, bulletin);
  owner.authorize("kwadd", {1}, bulletin);

  Client client(owner.credentials_for(1), owner.evaluator());
  if (!client.recover_pathkey(bulletin)) {
    detail = "path key recovery failed";
    return false;
  }

  auto expect = [&](const std::string& kw, const std::string& bits,
                    const std::vector<uint32_t>& ids) {
    if (owner.epoch(kw).membership.to_string() != bits) return false;
    SearchResult res = client.search(transport, bulletin, owner.keyword_label(kw));
    return res.status == SearchResult::Status::kFound && res.file_ids == ids;
  };

  if (!expect("kwdel", "100101", {0, 3, 5})) {
    detail = "initial delete-example state wrong";
    return false;
  }
  UpdateMessage up1 = owner.make_update("kwdel", UpdateOp::kDelete, {0});
  if (ashe_decrypt(owner.epoch("kwdel").k3, up1.e_up).to_string() != "100000") {
    detail = "delete mask is not 100000";
    return false;
  }
  auto st1 = remote_update(transport, server.address(), up1.addr, up1.e_up);
  if (!st1 || *st1 != WireStatus::kOk || !expect("kwdel", "000101", {3, 5})) {
    detail = "delete did not fold to 000101";
    return false;
  }

  if (!expect("kwadd", "101010", {0, 2, 4})) {
    detail = "initial add-example state wrong";
    return false;
  }
  UpdateMessage up2 = owner.make_update("kwadd", UpdateOp::kAdd, {3});
  if (ashe_decrypt(owner.epoch("kwadd").k3, up2.e_up).to_string() != "000100") {
    detail = "add mask is not 000100";
    return false;
  }
  auto st2 = remote_update(transport, server.address(), up2.addr, up2.e_up);
  if (!st2 || *st2 != WireStatus::kOk || !expect("kwadd", "101110", {0, 2, 3, 4})) {
    detail = "add did not fold to 101110";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 6: the audit passes the clean corpus and catches the
// instrumented leak.

bool criterion_audit(std::string& detail) {
  const CorpusResult& r = corpus();
  if (r.audit_failures != 0) {
    detail = std::to_string(r.audit_failures) + " clean scenarios failed the audit";
    return false;
  }
  ScenarioConfig config;
  config.seed = 99;
  config.n_clients = 4;
  config.n_keywords = 6;
  config.n_attributes = 2;
  config.gamma = 16;
  config.n_ops = 80;
  config.leaky = true;
  ScenarioOutcome out = run_scenario(config, shared_keys());
  if (!out.ok) {
    detail = "leaky fixture diverged from the oracle: " + out.error;
    return false;
  }
  if (out.audit_pass) {
    detail = "audit missed the instrumented leak";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 7: timing envelope plus scaling shape on the synthetic grid.

bool criterion_performance(std::string& detail) {
  auto row_of = [](const std::vector<BenchRow>& rows, const std::string& op, size_t w,
                   size_t d) -> const BenchRow* {
    for (const auto& row : rows) {
      if (row.op == op && row.keywords == w && row.files == d) return &row;
    }
    return nullptr;
  };

  BenchConfig sweep;
  sweep.keywords = {100, 1000, 10000};
  sweep.files = {1000};
  sweep.clients = {100};
  sweep.repetitions = 200;
  sweep.seed = 7;
  auto rows = run_bench(sweep);

  BenchConfig deep;
  deep.keywords = {1000};
  deep.files = {10000};
  deep.clients = {100};
  deep.repetitions = 100;
  deep.seed = 7;
  auto deep_rows = run_bench(deep);

  for (const auto* rs : {&rows, &deep_rows}) {
    for (const auto& row : *rs) {
      if (row.op == "error") {
        detail = "grid point (" + std::to_string(row.keywords) + ", " +
                 std::to_string(row.files) + ") failed: " + row.note;
        return false;
      }
    }
  }

  const BenchRow* edbgen = row_of(rows, "edbgen", 1000, 1000);
  const BenchRow* search = row_of(rows, "search", 1000, 1000);
  const BenchRow* update = row_of(rows, "update", 1000, 1000);
  const BenchRow* revoke = row_of(rows, "revoke", 1000, 1000);
  const BenchRow* search10k = row_of(deep_rows, "search", 1000, 10000);
  const BenchRow* update10k = row_of(deep_rows, "update", 1000, 10000);
  const BenchRow* revoke_w100 = row_of(rows, "revoke", 100, 1000);
  const BenchRow* revoke_w10k = row_of(rows, "revoke", 10000, 1000);
  if (!edbgen || !search || !update || !revoke || !search10k || !update10k ||
      !revoke_w100 || !revoke_w10k) {
    detail = "sweep is missing expected rows";
    return false;
  }

  if (edbgen->mean_ms >= 10000.0) {
    detail = "index generation took " + fmt("%.1f", edbgen->mean_ms) + " ms (limit 10000)";
    return false;
  }
  if (search->mean_ms >= 50.0) {
    detail = "mean search " + fmt("%.3f", search->mean_ms) + " ms (limit 50)";
    return false;
  }
  if (revoke->mean_ms >= 10.0) {
    detail = "mean revocation " + fmt("%.3f", revoke->mean_ms) + " ms (limit 10)";
    return false;
  }

  double ratio = (search10k->mean_ms + update10k->mean_ms) /
                 (search->mean_ms + update->mean_ms);
  if (ratio < 1.5 || ratio > 10.0) {
    detail = "search+update scaling ratio " + fmt("%.2f", ratio) + " outside [1.5, 10]";
    return false;
  }

  double rmin = std::min({revoke_w100->mean_ms, revoke->mean_ms, revoke_w10k->mean_ms});
  double rmax = std::max({revoke_w100->mean_ms, revoke->mean_ms, revoke_w10k->mean_ms});
  if (rmin <= 0.0 || rmax / rmin >= 2.0) {
    detail = "revocation mean varies " + fmt("%.2f", rmax / rmin) + "x across keyword counts";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 8: one scenario, two transports, identical persisted shards.

bool criterion_transport(std::string& detail) {
  ScenarioConfig config;
  config.seed = 2121;
  config.n_clients = 5;
  config.n_keywords = 8;
  config.n_attributes = 3;
  config.gamma = 24;
  config.n_ops = 80;

  ScenarioHarness inproc(config, shared_keys());
  if (!inproc.run()) {
    detail = "in-process run diverged: " + inproc.error();
    return false;
  }
  config.transport = TransportKind::kTcp;
  ScenarioHarness tcp(config, shared_keys());
  if (!tcp.run()) {
    detail = "tcp run diverged: " + tcp.error();
    return false;
  }

  std::map<Bytes, Bytes> a, b;
  for (const auto& server : inproc.servers()) a[server->address()] = persist_shard_bytes(*server);
  for (const auto& server : tcp.servers()) b[server->address()] = persist_shard_bytes(*server);
  if (a.size() != b.size() || a != b) {
    detail = "persisted shard states differ between transports";
    return false;
  }
  if (a.empty()) {
    detail = "scenario produced no shards";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* what;
    bool (*fn)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {"oracle equivalence across 1000 seeded scenarios", criterion_oracle},
      {"revocation over every non-empty subset of 8 clients", criterion_revocation},
      {"chameleon hash vectors and 10000 forged collisions", criterion_chameleon},
      {"fold chains match the brute-force XOR oracle", criterion_ashe},
      {"bitmap delete/add worked example end to end", criterion_bitmap},
      {"leakage audit passes clean corpus, flags leaky fixture", criterion_audit},
      {"timing envelope and scaling shape on the synthetic grid", criterion_performance},
      {"in-process and tcp transports persist identical shards", criterion_transport},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok) {
      std::printf("PASS - %zu. %s (%.1fs)\n", i + 1, criteria[i].what, secs);
    } else {
      std::printf("FAIL - %zu. %s (%.1fs): %s\n", i + 1, criteria[i].what, secs,
                  detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
