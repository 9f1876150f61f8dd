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
#include <vector>

#include "ssevault/bulletin.hpp"
#include "ssevault/owner.hpp"
#include "ssevault/registry.hpp"

namespace ssevault {

// A keyword credential recovered from a public token.
struct UnlockedKeyword {
  std::string attribute;
  Label16 label{};  // l_w
  uint32_t version = 0;
  PrfKey k_dht;
  mpz_class k1, k2;
  AsheKey k3;
  mpz_class r_secret;
};

struct Trapdoor {
  mpz_class trap1;  // H(K1, r_secret): the entry address
  mpz_class trap2;  // K2
};

struct SearchResult {
  enum class Status {
    kFound,
    kRejected,       // server refused a stale credential
    kNotAuthorized,  // no unmaskable token on the bulletin
    kNotFound,       // no entry at the address
    kUnresolvable,   // shard offline or unknown to the registry
  };
  Status status = Status::kNotFound;
  std::vector<uint32_t> file_ids;
};

// An authorized client: recovers its path key once, unmasks keyword tokens,
// locates shards through the registry, and runs searches end to end.
// Unlocked credentials are cached; a server rejection triggers one bulletin
// refresh to pick up post-revocation tokens.
class Client {
 public:
  Client(IssuedCredentials creds, std::shared_ptr<const ChameleonEvaluator> eval);

  uint32_t id() const { return creds_.id; }

  bool recover_pathkey(const Bulletin& bulletin);
  bool has_pathkey() const { return pathkey_.has_value(); }
  const PathKey& pathkey() const;

  std::optional<UnlockedKeyword> unlock_keyword(const Bulletin& bulletin, const Label16& l_w);

  Bytes locate_shard(const UnlockedKeyword& entry) const;
  Trapdoor gen_trapdoor(const UnlockedKeyword& entry) const;
  std::vector<uint32_t> decrypt_result(const UnlockedKeyword& entry,
                                       const StatefulCiphertext& e) const;

  SearchResult search(Transport& transport, const Bulletin& bulletin, const Label16& l_w);

  const std::map<Label16, UnlockedKeyword>& unlocked() const { return unlocked_; }
  void import_unlocked(UnlockedKeyword entry);

 private:
  IssuedCredentials creds_;
  std::shared_ptr<const ChameleonEvaluator> eval_;
  std::optional<PathKey> pathkey_;
  std::map<Label16, UnlockedKeyword> unlocked_;
};

}  // namespace ssevault
