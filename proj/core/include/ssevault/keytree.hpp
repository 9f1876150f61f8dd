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
#include <optional>
#include <set>
#include <vector>

#include "ssevault/prf.hpp"
#include "ssevault/rng.hpp"

namespace ssevault {

// Complete binary key-distribution tree in heap order: node 1 is the root,
// node i has children 2i and 2i+1, leaves occupy [n_pad, 2*n_pad). Clients
// are assigned to leaves left to right in registration order. Node keys are
// PRF-derived from the master key on demand and never stored.
class KeyTree {
 public:
  KeyTree() = default;
  KeyTree(PrfKey master, const std::vector<uint32_t>& clients);

  uint32_t height() const { return height_; }
  uint32_t leaf_count() const { return n_pad_; }
  const std::map<uint32_t, uint32_t>& leaf_of() const { return leaf_of_; }

  bool has_client(uint32_t client) const { return leaf_of_.contains(client); }
  uint32_t leaf(uint32_t client) const;
  PrfKey node_key(uint32_t node) const;

 private:
  PrfKey master_{};
  uint32_t n_pad_ = 0;
  uint32_t height_ = 0;
  std::map<uint32_t, uint32_t> leaf_of_;
};

struct PathKey {
  // Root-to-leaf (node-id, key) entries; length height + 1.
  std::vector<std::pair<uint32_t, PrfKey>> entries;

  bool operator==(const PathKey&) const = default;
};

struct PathKeyToken {
  Label16 label{};  // l_id, fresh per issuance
  Bytes mask;       // serialized PathKey ^ prf_expand(k_id, label)

  bool operator==(const PathKeyToken&) const = default;
};

using CoverSet = std::vector<uint32_t>;  // sorted node ids

KeyTree tree_build(const PrfKey& master, const std::vector<uint32_t>& clients);

PathKey path_key(const KeyTree& tree, uint32_t client);

Bytes path_key_serialize(const PathKey& pk);
std::optional<PathKey> path_key_deserialize(ByteView data);

PathKeyToken make_path_token(const PathKey& pk, const PrfKey& k_id, DetRng& rng);

// Unmasks and structurally validates; wrong key or corruption yields nullopt.
std::optional<PathKey> recover_path_key(const PathKeyToken& token, const PrfKey& k_id);

// Minimal complete-subtree cover whose descendant clients are exactly
// `authorized`.
CoverSet roots_subtrees(const KeyTree& tree, const std::set<uint32_t>& authorized);

// The unique path-key entry lying in the cover, absent when unauthorized.
std::optional<std::pair<uint32_t, PrfKey>> common_cover_key(const PathKey& pk,
                                                            const CoverSet& cover);

}  // namespace ssevault
