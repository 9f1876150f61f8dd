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
#include <optional>
#include <string>
#include <vector>

#include "ssevault/chameleon.hpp"
#include "ssevault/keytree.hpp"

namespace ssevault {

struct PubTokenRecord {
  std::string attribute;
  uint32_t version = 0;
  // (cover node id, masked payload), one per subtree root.
  std::vector<std::pair<uint32_t, Bytes>> masks;

  bool operator==(const PubTokenRecord&) const = default;
};

// Public bulletin board. Holds the chameleon parameters, per-client path-key
// tokens, per-keyword public tokens (latest publication wins), and the DHT
// table of shard addresses. Contains no secrets: everything here is safe to
// hand to an adversary.
class Bulletin {
 public:
  void put_params(const ChameleonParams& params) { params_ = params; }
  const std::optional<ChameleonParams>& params() const { return params_; }

  void put_path_token(uint32_t client_id, PathKeyToken token);
  std::optional<PathKeyToken> path_token(uint32_t client_id) const;

  // Replaces any previous publication for the same keyword label.
  void put_pub_tokens(const Label16& l_w, PubTokenRecord record);
  const PubTokenRecord* pub_tokens(const Label16& l_w) const;

  void put_dht(const std::string& attribute, Bytes shard_addr);
  const std::map<std::string, Bytes>& dht() const { return dht_; }

  const std::map<uint32_t, PathKeyToken>& path_tokens() const { return path_tokens_; }
  const std::map<Label16, PubTokenRecord>& all_pub_tokens() const { return pub_tokens_; }

  bool operator==(const Bulletin&) const = default;

  void save(const std::filesystem::path& file) const;
  static Bulletin load(const std::filesystem::path& file);

 private:
  std::optional<ChameleonParams> params_;
  std::map<uint32_t, PathKeyToken> path_tokens_;
  std::map<Label16, PubTokenRecord> pub_tokens_;
  std::map<std::string, Bytes> dht_;
};

}  // namespace ssevault
