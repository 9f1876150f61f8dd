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

#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "ssevault/registry.hpp"
#include "ssevault/server.hpp"
#include "ssevault/wire.hpp"

namespace ssevault {

// One-shot request/response against a "host:port" endpoint.
std::optional<Frame> tcp_rpc(const std::string& endpoint, const Frame& request);

// Minimal frame-per-request TCP server: accepts connections and answers each
// incoming frame with handler(frame). One thread per connection; adequate
// for the simulation harness's shard counts.
class TcpHost {
 public:
  using Handler = std::function<Frame(const Frame&)>;

  TcpHost(const std::string& bind_host, uint16_t port, Handler handler);
  ~TcpHost();

  TcpHost(const TcpHost&) = delete;
  TcpHost& operator=(const TcpHost&) = delete;

  std::string endpoint() const;  // "host:port" with the bound port
  uint16_t port() const { return port_; }
  void stop();

 private:
  void accept_loop();
  void serve_connection(int fd);

  std::string host_;
  uint16_t port_ = 0;
  int listen_fd_ = -1;
  std::atomic<bool> running_{false};
  std::thread accept_thread_;
  std::mutex conn_mu_;
  std::vector<int> conn_fds_;
  std::vector<std::thread> conn_threads_;
  Handler handler_;
};

// Registry service speaking REGISTER/RESOLVE.
class TcpRegistryHost {
 public:
  explicit TcpRegistryHost(const std::string& bind_host = "127.0.0.1", uint16_t port = 0);

  std::string endpoint() const { return host_.endpoint(); }
  void stop() { host_.stop(); }

 private:
  Frame handle(const Frame& request);

  ShardRegistry registry_;
  TcpHost host_;
};

// Hosts one shard over TCP and registers it with a registry.
class TcpShardHost {
 public:
  TcpShardHost(StorageServer& server, const std::string& bind_host = "127.0.0.1",
               uint16_t port = 0);

  std::string endpoint() const { return host_.endpoint(); }
  bool register_with(const std::string& registry_endpoint);
  void stop() { host_.stop(); }

 private:
  StorageServer& server_;
  TcpHost host_;
};

// Transport that resolves shard addresses through a TCP registry and speaks
// the frame protocol to the resolved endpoints.
class TcpTransport : public Transport {
 public:
  explicit TcpTransport(std::string registry_endpoint);

  std::optional<Frame> call(const Bytes& shard_addr, const Frame& request) override;

 private:
  std::string registry_endpoint_;
};

}  // namespace ssevault
