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

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssevault/ashe.hpp"
#include "ssevault/bitmap.hpp"
#include "ssevault/bulletin.hpp"
#include "ssevault/chameleon.hpp"
#include "ssevault/keytree.hpp"

namespace ssevault {

struct OwnerConfig {
  unsigned lambda_q = 160;
  unsigned lambda_p = 1024;
  size_t gamma = 64;                              // bitmap width (file universe)
  std::vector<uint32_t> clients;                  // registration order
  std::map<std::string, std::string> attribute_of;  // keyword -> attribute
};

// Owner-private per-keyword record. `state` is the freshness counter bumped
// by updates and revocations; `enc_state` tracks the ASHE chain head, which
// advances only when a ciphertext is produced (revocations rotate keys
// without encrypting, so the two drift apart by design). `k3_state` records
// the state at which the never-rotated K3 was derived.
struct KeywordEpoch {
  std::string attribute;
  Label16 label{};  // l_w
  uint64_t state = 0;
  uint64_t enc_state = 0;
  uint64_t k3_state = 0;
  uint32_t version = 0;  // key version j, bumped by revocations
  mpz_class k1, k2;
  AsheKey k3;
  mpz_class r_secret;  // the owner-held randomizer
  mpz_class addr;      // stable map address = H(K1, r_secret)
  BitString membership;
};

struct KeywordKeys {
  mpz_class k1, k2;
  AsheKey k3;
};

struct PubToken {
  std::string attribute;
  Label16 label{};  // l_w
  uint32_t version = 0;
  uint32_t node_id = 0;  // cover subtree root
  Bytes mask;            // payload ^ prf_expand(k_node, l_w)
};

enum class UpdateOp : uint8_t { kAdd = 1, kDelete = 2 };

struct UpdateMessage {
  Bytes addr;
  StatefulCiphertext e_up;
};

struct SwapMessage {
  Bytes addr;
  mpz_class r_new;
};

struct RevokeOutput {
  SwapMessage swap;
  std::vector<PubToken> tokens;
};

struct IssuedCredentials {
  uint32_t id = 0;
  PrfKey k_id;
};

struct GroundTruthEvent {
  uint64_t ts = 0;
  std::string keyword;
  UpdateOp op = UpdateOp::kAdd;
  std::vector<uint32_t> file_ids;
};

struct ShardInit {
  std::string attribute;
  Bytes shard_addr;  // S_att
  std::vector<std::tuple<Bytes, mpz_class, StatefulCiphertext>> entries;  // (addr, r, e)
};

// Keyword keys at a given state: K1, K2 as Z*_q scalars via h1, K3 as a raw
// PRF output usable as an ASHE key.
KeywordKeys derive_keyword_keys(const PrfKey& k_att, std::string_view w, uint64_t st,
                                const mpz_class& q);

// The data owner. Single-writer state machine: mutating calls (build_edb,
// authorize, make_update, revoke) must be externally serialized; the
// mutation counter lets callers assert the contract.
class Owner {
 public:
  static Owner init(OwnerConfig config, DetRng& rng,
                    std::optional<ChameleonKeyPair> keys = std::nullopt);

  IssuedCredentials credentials_for(uint32_t client) const;

  // Publishes the chameleon parameters and one fresh path-key token per
  // client.
  void publish_enrollment(Bulletin& bulletin);

  // Builds every keyword's initial entry, grouped by attribute shard, and
  // publishes the DHT table.
  std::vector<ShardInit> build_edb(const std::map<std::string, std::vector<uint32_t>>& db,
                                   Bulletin& bulletin);

  std::vector<PubToken> authorize(const std::string& keyword,
                                  const std::set<uint32_t>& authorized, Bulletin& bulletin);

  UpdateMessage make_update(const std::string& keyword, UpdateOp op,
                            const std::vector<uint32_t>& ids);

  RevokeOutput revoke(const std::string& keyword, const std::set<uint32_t>& remaining,
                      Bulletin& bulletin);

  const ChameleonParams& params() const { return keys_.params; }
  std::shared_ptr<const ChameleonEvaluator> evaluator() const { return eval_; }
  const KeyTree& tree() const { return tree_; }
  size_t gamma() const { return config_.gamma; }
  const std::vector<uint32_t>& clients() const { return config_.clients; }

  bool has_keyword(const std::string& keyword) const { return epochs_.contains(keyword); }
  const KeywordEpoch& epoch(const std::string& keyword) const;
  Label16 keyword_label(const std::string& keyword) const;
  Bytes shard_addr(const std::string& attribute) const;
  const std::vector<GroundTruthEvent>& history() const { return history_; }
  uint64_t mutations() const { return mutations_; }

  void save(const std::filesystem::path& file) const;
  static Owner load(const std::filesystem::path& file);

 private:
  Owner() = default;

  PrfKey k_att(const std::string& attribute) const;
  PrfKey k_dht(const std::string& attribute) const;
  KeywordEpoch& epoch_mut(const std::string& keyword);
  std::vector<PubToken> issue_tokens(const KeywordEpoch& ep, const std::set<uint32_t>& members,
                                     Bulletin& bulletin);
  Bytes token_payload(const KeywordEpoch& ep) const;

  OwnerConfig config_;
  PrfKey mk_;
  ChameleonKeyPair keys_;
  std::shared_ptr<const ChameleonEvaluator> eval_;
  KeyTree tree_;
  std::map<std::string, uint64_t> dht_states_;  // attribute -> st_dht
  std::map<std::string, KeywordEpoch> epochs_;
  std::vector<GroundTruthEvent> history_;
  uint64_t clock_ = 0;
  uint64_t mutations_ = 0;
  DetRng rng_{0};
};

}  // namespace ssevault
