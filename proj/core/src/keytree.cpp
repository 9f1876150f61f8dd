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

#include "ssevault/keytree.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssevault {

namespace {

constexpr size_t kMaxPathLen = 33;  // supports up to 2^32 leaves

uint32_t next_pow2(uint32_t n) {
  uint32_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

KeyTree::KeyTree(PrfKey master, const std::vector<uint32_t>& clients) : master_(master) {
  if (clients.empty()) throw std::invalid_argument("key tree needs at least one client");
  n_pad_ = next_pow2(static_cast<uint32_t>(clients.size()));
  height_ = 0;
  for (uint32_t p = n_pad_; p > 1; p >>= 1) ++height_;
  uint32_t leaf = n_pad_;
  for (uint32_t c : clients) {
    if (!leaf_of_.emplace(c, leaf++).second) {
      throw std::invalid_argument("duplicate client id");
    }
  }
}

uint32_t KeyTree::leaf(uint32_t client) const {
  auto it = leaf_of_.find(client);
  if (it == leaf_of_.end()) throw std::out_of_range("unknown client id");
  return it->second;
}

PrfKey KeyTree::node_key(uint32_t node) const {
  ByteWriter w;
  w.raw(as_bytes("node"));
  w.u32(node);
  return prf(master_, w.data());
}

KeyTree tree_build(const PrfKey& master, const std::vector<uint32_t>& clients) {
  return KeyTree(master, clients);
}

PathKey path_key(const KeyTree& tree, uint32_t client) {
  std::vector<uint32_t> nodes;
  for (uint32_t v = tree.leaf(client); v >= 1; v >>= 1) nodes.push_back(v);
  std::reverse(nodes.begin(), nodes.end());
  PathKey pk;
  for (uint32_t v : nodes) pk.entries.emplace_back(v, tree.node_key(v));
  return pk;
}

Bytes path_key_serialize(const PathKey& pk) {
  ByteWriter w;
  w.u16(static_cast<uint16_t>(pk.entries.size()));
  for (const auto& [node, key] : pk.entries) {
    w.u32(node);
    w.raw(key.view());
  }
  return w.take();
}

std::optional<PathKey> path_key_deserialize(ByteView data) {
  try {
    ByteReader r(data);
    size_t count = r.u16();
    if (count == 0 || count > kMaxPathLen) return std::nullopt;
    PathKey pk;
    uint32_t prev = 0;
    for (size_t i = 0; i < count; ++i) {
      uint32_t node = r.u32();
      PrfKey key = PrfKey::from_bytes(r.raw(kPrfKeyLen));
      if (i == 0) {
        if (node != 1) return std::nullopt;
      } else if (node != 2 * prev && node != 2 * prev + 1) {
        return std::nullopt;
      }
      prev = node;
      pk.entries.emplace_back(node, key);
    }
    r.expect_done();
    return pk;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

PathKeyToken make_path_token(const PathKey& pk, const PrfKey& k_id, DetRng& rng) {
  PathKeyToken token;
  rng.fill(token.label.data(), token.label.size());
  Bytes plain = path_key_serialize(pk);
  Bytes pad = prf_expand(k_id, {token.label.data(), token.label.size()}, plain.size());
  token.mask.resize(plain.size());
  for (size_t i = 0; i < plain.size(); ++i) token.mask[i] = plain[i] ^ pad[i];
  return token;
}

std::optional<PathKey> recover_path_key(const PathKeyToken& token, const PrfKey& k_id) {
  Bytes pad = prf_expand(k_id, {token.label.data(), token.label.size()}, token.mask.size());
  Bytes plain(token.mask.size());
  for (size_t i = 0; i < plain.size(); ++i) plain[i] = token.mask[i] ^ pad[i];
  return path_key_deserialize(plain);
}

CoverSet roots_subtrees(const KeyTree& tree, const std::set<uint32_t>& authorized) {
  if (authorized.empty()) throw std::invalid_argument("empty authorized set");
  uint32_t n_pad = tree.leaf_count();
  std::vector<bool> covered(2 * n_pad, false);
  for (uint32_t c : authorized) covered[tree.leaf(c)] = true;
  for (uint32_t v = n_pad - 1; v >= 1; --v) {
    covered[v] = covered[2 * v] && covered[2 * v + 1];
  }
  CoverSet cover;
  std::vector<uint32_t> stack{1};
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    if (covered[v]) {
      cover.push_back(v);
    } else if (v < n_pad) {
      stack.push_back(2 * v + 1);
      stack.push_back(2 * v);
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::optional<std::pair<uint32_t, PrfKey>> common_cover_key(const PathKey& pk,
                                                            const CoverSet& cover) {
  for (const auto& entry : pk.entries) {
    if (std::binary_search(cover.begin(), cover.end(), entry.first)) return entry;
  }
  return std::nullopt;
}

}  // namespace ssevault
