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

#include "ssevault/registry.hpp"

namespace ssevault {

bool ShardRegistry::register_shard(const Bytes& addr, std::string endpoint) {
  std::lock_guard lock(mu_);
  return table_.emplace(addr, std::move(endpoint)).second;
}

std::optional<std::string> ShardRegistry::resolve(const Bytes& addr) const {
  std::lock_guard lock(mu_);
  auto it = table_.find(addr);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::map<Bytes, std::string> ShardRegistry::snapshot() const {
  std::lock_guard lock(mu_);
  return table_;
}

bool InprocTransport::attach(StorageServer* server) {
  std::lock_guard lock(mu_);
  const Bytes& addr = server->address();
  if (!registry_.register_shard(addr, "inproc://" + hex_encode(addr))) return false;
  servers_[addr] = server;
  return true;
}

std::optional<Frame> InprocTransport::call(const Bytes& shard_addr, const Frame& request) {
  StorageServer* server = nullptr;
  {
    std::lock_guard lock(mu_);
    auto it = servers_.find(shard_addr);
    if (it == servers_.end()) return std::nullopt;
    server = it->second;
  }
  // Roundtrip through the frame codec so both transports exercise the exact
  // same encode/decode path.
  Bytes raw = frame_encode(request);
  Frame decoded;
  size_t consumed = 0;
  if (frame_decode(raw, decoded, consumed) != DecodeResult::kOk) return std::nullopt;
  return dispatch_frame(*server, decoded);
}

std::optional<WireStatus> remote_store_entry(Transport& t, const Bytes& shard_addr,
                                             const Bytes& addr, const Bytes& r,
                                             const StatefulCiphertext& e) {
  WireStore m;
  m.entry = WireStoreEntry{addr, r, e};
  auto resp = t.call(shard_addr, encode_store(m));
  if (!resp) return std::nullopt;
  return parse_ack(*resp).status;
}

std::optional<WireStatus> remote_store_blob(Transport& t, const Bytes& shard_addr,
                                            uint32_t file_id, Bytes data) {
  WireStore m;
  m.blob = WireStoreBlob{file_id, std::move(data)};
  auto resp = t.call(shard_addr, encode_store(m));
  if (!resp) return std::nullopt;
  return parse_ack(*resp).status;
}

std::optional<WireStatus> remote_update(Transport& t, const Bytes& shard_addr,
                                        const Bytes& addr, const StatefulCiphertext& e_up) {
  auto resp = t.call(shard_addr, encode_update({addr, e_up}));
  if (!resp) return std::nullopt;
  return parse_ack(*resp).status;
}

std::optional<WireStatus> remote_swap(Transport& t, const Bytes& shard_addr, const Bytes& addr,
                                      const Bytes& r_new) {
  auto resp = t.call(shard_addr, encode_swap({addr, r_new}));
  if (!resp) return std::nullopt;
  return parse_ack(*resp).status;
}

std::optional<WireSearchResp> remote_search(Transport& t, const Bytes& shard_addr,
                                            const Bytes& trap1, const Bytes& trap2) {
  auto resp = t.call(shard_addr, encode_search({trap1, trap2}));
  if (!resp) return std::nullopt;
  return parse_search_resp(*resp);
}

std::optional<WireFetchResp> remote_fetch(Transport& t, const Bytes& shard_addr,
                                          const std::vector<uint32_t>& file_ids) {
  auto resp = t.call(shard_addr, encode_fetch({file_ids}));
  if (!resp) return std::nullopt;
  return parse_fetch_resp(*resp);
}

}  // namespace ssevault
