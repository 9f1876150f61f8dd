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

#include "ssevault/tcp.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>
#include <stdexcept>

namespace ssevault {

namespace {

bool split_endpoint(const std::string& endpoint, std::string& host, std::string& port) {
  size_t colon = endpoint.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == endpoint.size()) return false;
  host = endpoint.substr(0, colon);
  port = endpoint.substr(colon + 1);
  return true;
}

int connect_to(const std::string& endpoint) {
  std::string host, port;
  if (!split_endpoint(endpoint, host, port)) return -1;
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (getaddrinfo(host.c_str(), port.c_str(), &hints, &res) != 0) return -1;
  int fd = -1;
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    fd = socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    if (connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    close(fd);
    fd = -1;
  }
  freeaddrinfo(res);
  return fd;
}

bool send_all(int fd, ByteView data) {
  size_t off = 0;
  while (off < data.size()) {
    ssize_t n = send(fd, data.data() + off, data.size() - off, MSG_NOSIGNAL);
    if (n <= 0) return false;
    off += static_cast<size_t>(n);
  }
  return true;
}

bool recv_exact(int fd, uint8_t* out, size_t len) {
  size_t off = 0;
  while (off < len) {
    ssize_t n = recv(fd, out + off, len - off, 0);
    if (n <= 0) return false;
    off += static_cast<size_t>(n);
  }
  return true;
}

// Reads exactly one frame from the socket; nullopt on EOF or protocol error.
std::optional<Frame> read_frame(int fd) {
  uint8_t head[4];
  if (!recv_exact(fd, head, sizeof head)) return std::nullopt;
  uint32_t len = 0;
  for (uint8_t b : head) len = len << 8 | b;
  if (len < 1 || len > kMaxFrameLen) return std::nullopt;
  Bytes buf(4 + len);
  std::memcpy(buf.data(), head, sizeof head);
  if (!recv_exact(fd, buf.data() + 4, len)) return std::nullopt;
  Frame frame;
  size_t consumed = 0;
  if (frame_decode(buf, frame, consumed) != DecodeResult::kOk) return std::nullopt;
  return frame;
}

}  // namespace

std::optional<Frame> tcp_rpc(const std::string& endpoint, const Frame& request) {
  int fd = connect_to(endpoint);
  if (fd < 0) return std::nullopt;
  std::optional<Frame> reply;
  if (send_all(fd, frame_encode(request))) reply = read_frame(fd);
  close(fd);
  return reply;
}

TcpHost::TcpHost(const std::string& bind_host, uint16_t port, Handler handler)
    : host_(bind_host), handler_(std::move(handler)) {
  listen_fd_ = socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw std::runtime_error("socket() failed");
  int one = 1;
  setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (inet_pton(AF_INET, bind_host.c_str(), &addr.sin_addr) != 1) {
    close(listen_fd_);
    throw std::runtime_error("bad bind address: " + bind_host);
  }
  if (bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
      listen(listen_fd_, 64) != 0) {
    close(listen_fd_);
    throw std::runtime_error("cannot listen on " + bind_host);
  }
  socklen_t len = sizeof addr;
  getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
  running_ = true;
  accept_thread_ = std::thread([this] { accept_loop(); });
}

TcpHost::~TcpHost() { stop(); }

std::string TcpHost::endpoint() const { return host_ + ":" + std::to_string(port_); }

void TcpHost::accept_loop() {
  while (running_) {
    int fd = accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) break;
    std::lock_guard lock(conn_mu_);
    if (!running_) {
      close(fd);
      break;
    }
    conn_fds_.push_back(fd);
    conn_threads_.emplace_back([this, fd] { serve_connection(fd); });
  }
}

void TcpHost::serve_connection(int fd) {
  while (running_) {
    auto request = read_frame(fd);
    if (!request) break;
    if (!send_all(fd, frame_encode(handler_(*request)))) break;
  }
  close(fd);
}

void TcpHost::stop() {
  bool was_running = running_.exchange(false);
  if (!was_running) return;
  shutdown(listen_fd_, SHUT_RDWR);
  close(listen_fd_);
  {
    std::lock_guard lock(conn_mu_);
    for (int fd : conn_fds_) shutdown(fd, SHUT_RDWR);
  }
  if (accept_thread_.joinable()) accept_thread_.join();
  std::lock_guard lock(conn_mu_);
  for (auto& t : conn_threads_) {
    if (t.joinable()) t.join();
  }
  conn_threads_.clear();
  conn_fds_.clear();
}

TcpRegistryHost::TcpRegistryHost(const std::string& bind_host, uint16_t port)
    : host_(bind_host, port, [this](const Frame& f) { return handle(f); }) {}

Frame TcpRegistryHost::handle(const Frame& request) {
  try {
    switch (request.msg_type) {
      case kMsgRegister: {
        WireRegister m = parse_register(request);
        bool ok = registry_.register_shard(m.addr, m.endpoint);
        return encode_ack({ok ? WireStatus::kOk : WireStatus::kDuplicate, {}});
      }
      case kMsgResolve: {
        WireResolve m = parse_resolve(request);
        auto endpoint = registry_.resolve(m.addr);
        if (!endpoint) return encode_ack({WireStatus::kNotFound, {}});
        return encode_ack({WireStatus::kOk, to_bytes(*endpoint)});
      }
      default:
        return encode_ack({WireStatus::kMalformed, {}});
    }
  } catch (const std::exception&) {
    return encode_ack({WireStatus::kMalformed, {}});
  }
}

TcpShardHost::TcpShardHost(StorageServer& server, const std::string& bind_host, uint16_t port)
    : server_(server),
      host_(bind_host, port, [this](const Frame& f) { return dispatch_frame(server_, f); }) {}

bool TcpShardHost::register_with(const std::string& registry_endpoint) {
  auto reply = tcp_rpc(registry_endpoint, encode_register({server_.address(), endpoint()}));
  if (!reply) return false;
  return parse_ack(*reply).status == WireStatus::kOk;
}

TcpTransport::TcpTransport(std::string registry_endpoint)
    : registry_endpoint_(std::move(registry_endpoint)) {}

std::optional<Frame> TcpTransport::call(const Bytes& shard_addr, const Frame& request) {
  auto resolved = tcp_rpc(registry_endpoint_, encode_resolve({shard_addr}));
  if (!resolved) return std::nullopt;
  WireAck ack = parse_ack(*resolved);
  if (ack.status != WireStatus::kOk) return std::nullopt;
  return tcp_rpc(to_string(ack.extra), request);
}

}  // namespace ssevault
