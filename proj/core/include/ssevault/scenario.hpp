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

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssevault/audit.hpp"
#include "ssevault/client.hpp"
#include "ssevault/owner.hpp"
#include "ssevault/registry.hpp"
#include "ssevault/server.hpp"
#include "ssevault/tcp.hpp"

namespace ssevault {

enum class TransportKind { kInproc, kTcp };

// A deterministic multi-party simulation: one owner, a shard per attribute,
// n_clients clients, and a scripted op mix (~50% search, 30% update, 10%
// revoke, 10% authorize) derived entirely from the seed.
struct ScenarioConfig {
  uint64_t seed = 1;
  size_t n_clients = 4;     // [1, 8]
  size_t n_keywords = 6;    // [1, 16]
  size_t n_attributes = 2;  // [1, n_keywords]
  size_t gamma = 16;        // [1, 64]
  size_t n_ops = 40;        // [0, 200]
  TransportKind transport = TransportKind::kInproc;
  // Fixture switch: shards annotate update records with the plaintext op,
  // which the leakage audit must catch.
  bool leaky = false;
  unsigned lambda_q = 128;
  unsigned lambda_p = 512;
};

struct ScenarioStats {
  size_t searches = 0;
  size_t found = 0;
  size_t rejected = 0;
  size_t not_authorized = 0;
  size_t updates = 0;
  size_t deletions = 0;
  size_t revocations = 0;
  size_t authorizations = 0;
  size_t deletion_checks = 0;
};

// Runs the scripted scenario while maintaining a plaintext oracle (file sets,
// token membership, key versions, per-client credential caches) and checks
// every observable outcome against it: each search op, plus a follow-up
// search after every update, revocation, and authorization.
class ScenarioHarness {
 public:
  explicit ScenarioHarness(ScenarioConfig config,
                           std::optional<ChameleonKeyPair> keys = std::nullopt);
  ~ScenarioHarness();

  ScenarioHarness(const ScenarioHarness&) = delete;
  ScenarioHarness& operator=(const ScenarioHarness&) = delete;

  // Executes ops until done or the first divergence from the oracle.
  bool run();
  bool run_ops(size_t count);
  size_t ops_done() const { return next_op_; }
  size_t ops_total() const { return script_.size(); }
  const std::string& error() const { return error_; }
  const ScenarioStats& stats() const { return stats_; }

  Owner& owner() { return *owner_; }
  Bulletin& bulletin() { return bulletin_; }
  const std::vector<std::unique_ptr<StorageServer>>& servers() const { return servers_; }
  Transport& transport() { return *transport_; }

  std::vector<ShardTranscript> transcripts() const;
  LeakageReport audit() const;

  // Saves owner, bulletin, and every shard under dir; reload() rebuilds the
  // whole deployment from those files. Clients come back with empty
  // credential caches and the oracle resets its cache model to match.
  void persist(const std::filesystem::path& dir) const;
  void reload(const std::filesystem::path& dir);

 private:
  struct ScriptOp {
    enum class Kind : uint8_t { kSearch, kUpdate, kRevoke, kAuthorize };
    Kind kind = Kind::kSearch;
    uint32_t client = 0;
    std::string keyword;
    UpdateOp op = UpdateOp::kAdd;
    std::vector<uint32_t> ids;
    std::set<uint32_t> members;
  };

  struct OracleKeyword {
    uint32_t version = 1;
    std::set<uint32_t> members;  // who can unmask the latest token record
    std::set<uint32_t> files;
  };

  void setup(std::optional<ChameleonKeyPair> keys);
  void generate_script(DetRng& rng);
  void start_transport();
  void build_clients();
  void install_tap(StorageServer& server);

  bool exec_op(const ScriptOp& op);
  bool verify_search(uint32_t client, const std::string& keyword, const std::string& why);
  SearchResult::Status expected_status(uint32_t client, const std::string& keyword) const;
  bool fail(std::string message);

  ScenarioConfig config_;
  std::vector<uint32_t> client_ids_;
  std::vector<std::string> keywords_;

  std::optional<Owner> owner_;
  Bulletin bulletin_;
  std::vector<Bytes> shard_addrs_;
  std::vector<std::unique_ptr<StorageServer>> servers_;
  std::unique_ptr<TcpRegistryHost> registry_host_;
  std::vector<std::unique_ptr<TcpShardHost>> shard_hosts_;
  std::unique_ptr<Transport> transport_;
  std::map<uint32_t, Client> clients_;

  std::map<std::string, OracleKeyword> truth_;
  std::map<std::pair<uint32_t, std::string>, uint32_t> cache_version_;

  std::vector<ScriptOp> script_;
  size_t next_op_ = 0;
  ScenarioStats stats_;
  std::string error_;
  std::vector<uint32_t> last_result_;

  std::string last_update_op_;
  std::string last_update_ids_;
};

struct ScenarioOutcome {
  bool ok = false;
  bool audit_pass = false;
  std::string error;
  ScenarioStats stats;
};

// One-shot convenience wrapper; exceptions become failed outcomes. Passing a
// pre-generated key pair skips parameter generation, which dominates setup.
ScenarioOutcome run_scenario(const ScenarioConfig& config,
                             std::optional<ChameleonKeyPair> keys = std::nullopt);

}  // namespace ssevault
