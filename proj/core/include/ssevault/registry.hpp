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
#include <mutex>
#include <optional>
#include <string>

#include "ssevault/server.hpp"
#include "ssevault/wire.hpp"

namespace ssevault {

// The DHT realized as an address table: shard address -> endpoint.
class ShardRegistry {
 public:
  // Duplicate registration is rejected.
  bool register_shard(const Bytes& addr, std::string endpoint);
  std::optional<std::string> resolve(const Bytes& addr) const;
  std::map<Bytes, std::string> snapshot() const;

 private:
  mutable std::mutex mu_;
  std::map<Bytes, std::string> table_;
};

// Uniform client/owner view of the shard fleet. call() resolves the shard
// address and performs one request/response exchange; nullopt means the
// address is unresolvable or the shard is unreachable.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::optional<Frame> call(const Bytes& shard_addr, const Frame& request) = 0;
};

class InprocTransport : public Transport {
 public:
  bool attach(StorageServer* server);
  std::optional<Frame> call(const Bytes& shard_addr, const Frame& request) override;
  const ShardRegistry& registry() const { return registry_; }

 private:
  ShardRegistry registry_;
  std::map<Bytes, StorageServer*> servers_;
  std::mutex mu_;
};

// Owner- and client-side RPC helpers over any transport. A nullopt status
// means transport failure (unresolvable address or connection loss).
std::optional<WireStatus> remote_store_entry(Transport& t, const Bytes& shard_addr,
                                             const Bytes& addr, const Bytes& r,
                                             const StatefulCiphertext& e);
std::optional<WireStatus> remote_store_blob(Transport& t, const Bytes& shard_addr,
                                            uint32_t file_id, Bytes data);
std::optional<WireStatus> remote_update(Transport& t, const Bytes& shard_addr,
                                        const Bytes& addr, const StatefulCiphertext& e_up);
std::optional<WireStatus> remote_swap(Transport& t, const Bytes& shard_addr, const Bytes& addr,
                                      const Bytes& r_new);
std::optional<WireSearchResp> remote_search(Transport& t, const Bytes& shard_addr,
                                            const Bytes& trap1, const Bytes& trap2);
std::optional<WireFetchResp> remote_fetch(Transport& t, const Bytes& shard_addr,
                                          const std::vector<uint32_t>& file_ids);

}  // namespace ssevault
