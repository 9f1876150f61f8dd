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

#include "ssevault/bulletin.hpp"

#include <stdexcept>

#include "ssevault/persist.hpp"

namespace ssevault {

namespace {

enum BulletinRecordType : uint8_t {
  kRecPathToken = 1,
  kRecPubToken = 2,
  kRecDht = 3,
  kRecParams = 4,
};

}  // namespace

void Bulletin::put_path_token(uint32_t client_id, PathKeyToken token) {
  path_tokens_[client_id] = std::move(token);
}

std::optional<PathKeyToken> Bulletin::path_token(uint32_t client_id) const {
  auto it = path_tokens_.find(client_id);
  if (it == path_tokens_.end()) return std::nullopt;
  return it->second;
}

void Bulletin::put_pub_tokens(const Label16& l_w, PubTokenRecord record) {
  pub_tokens_[l_w] = std::move(record);
}

const PubTokenRecord* Bulletin::pub_tokens(const Label16& l_w) const {
  auto it = pub_tokens_.find(l_w);
  if (it == pub_tokens_.end()) return nullptr;
  return &it->second;
}

void Bulletin::put_dht(const std::string& attribute, Bytes shard_addr) {
  dht_[attribute] = std::move(shard_addr);
}

void Bulletin::save(const std::filesystem::path& file) const {
  std::vector<VaultRecord> records;
  if (params_) {
    records.push_back({kRecParams, ch_params_serialize(*params_)});
  }
  for (const auto& [client_id, token] : path_tokens_) {
    ByteWriter w;
    w.u32(client_id);
    w.raw({token.label.data(), token.label.size()});
    w.lp32(token.mask);
    records.push_back({kRecPathToken, w.take()});
  }
  for (const auto& [l_w, rec] : pub_tokens_) {
    ByteWriter w;
    w.raw({l_w.data(), l_w.size()});
    w.lp16(as_bytes(rec.attribute));
    w.u32(rec.version);
    w.u16(static_cast<uint16_t>(rec.masks.size()));
    for (const auto& [node, mask] : rec.masks) {
      w.u32(node);
      w.lp32(mask);
    }
    records.push_back({kRecPubToken, w.take()});
  }
  for (const auto& [att, addr] : dht_) {
    ByteWriter w;
    w.lp16(as_bytes(att));
    w.lp16(addr);
    records.push_back({kRecDht, w.take()});
  }
  vault_write_file(file, kVaultBulletin, records);
}

Bulletin Bulletin::load(const std::filesystem::path& file) {
  Bulletin b;
  for (const auto& rec : vault_read_file(file, kVaultBulletin)) {
    ByteReader r(rec.payload);
    switch (rec.type) {
      case kRecParams:
        b.params_ = ch_params_deserialize(rec.payload);
        break;
      case kRecPathToken: {
        uint32_t client_id = r.u32();
        PathKeyToken token;
        Bytes label = r.raw(token.label.size());
        std::copy(label.begin(), label.end(), token.label.begin());
        token.mask = r.lp32();
        r.expect_done();
        b.path_tokens_[client_id] = std::move(token);
        break;
      }
      case kRecPubToken: {
        Label16 l_w{};
        Bytes label = r.raw(l_w.size());
        std::copy(label.begin(), label.end(), l_w.begin());
        PubTokenRecord tok;
        tok.attribute = to_string(r.lp16());
        tok.version = r.u32();
        size_t n = r.u16();
        for (size_t i = 0; i < n; ++i) {
          uint32_t node = r.u32();
          tok.masks.emplace_back(node, r.lp32());
        }
        r.expect_done();
        b.pub_tokens_[l_w] = std::move(tok);
        break;
      }
      case kRecDht: {
        std::string att = to_string(r.lp16());
        Bytes addr = r.lp16();
        r.expect_done();
        b.dht_[att] = std::move(addr);
        break;
      }
      default:
        throw std::runtime_error("unknown bulletin record type");
    }
  }
  return b;
}

}  // namespace ssevault
