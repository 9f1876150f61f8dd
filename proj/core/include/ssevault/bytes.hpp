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

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssevault {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;
using Label16 = std::array<uint8_t, 16>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline std::string to_string(ByteView b) {
  return std::string(b.begin(), b.end());
}

std::string hex_encode(ByteView data);
Bytes hex_decode(std::string_view hex);

// Incremental big-endian serializer used by the wire codec and the
// persistence container.
class ByteWriter {
 public:
  void u8(uint8_t v) { out_.push_back(v); }

  void u16(uint16_t v) {
    out_.push_back(static_cast<uint8_t>(v >> 8));
    out_.push_back(static_cast<uint8_t>(v));
  }

  void u32(uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) out_.push_back(static_cast<uint8_t>(v >> s));
  }

  void u64(uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) out_.push_back(static_cast<uint8_t>(v >> s));
  }

  void raw(ByteView b) { out_.insert(out_.end(), b.begin(), b.end()); }

  void lp16(ByteView b) {
    if (b.size() > 0xFFFF) throw std::length_error("lp16 overflow");
    u16(static_cast<uint16_t>(b.size()));
    raw(b);
  }

  void lp32(ByteView b) {
    if (b.size() > 0xFFFFFFFFu) throw std::length_error("lp32 overflow");
    u32(static_cast<uint32_t>(b.size()));
    raw(b);
  }

  const Bytes& data() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

// Bounds-checked reader over a byte view; throws on underrun so malformed
// frames and corrupt files surface as exceptions instead of wild reads.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  uint8_t u8() { return take(1)[0]; }

  uint16_t u16() {
    auto b = take(2);
    return static_cast<uint16_t>(b[0]) << 8 | b[1];
  }

  uint32_t u32() {
    auto b = take(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = v << 8 | b[i];
    return v;
  }

  uint64_t u64() {
    auto b = take(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = v << 8 | b[i];
    return v;
  }

  Bytes raw(size_t n) {
    auto b = take(n);
    return Bytes(b.begin(), b.end());
  }

  Bytes lp16() { return raw(u16()); }
  Bytes lp32() { return raw(u32()); }

  size_t remaining() const { return data_.size() - off_; }
  bool done() const { return remaining() == 0; }

  void expect_done() const {
    if (!done()) throw std::runtime_error("trailing bytes in message");
  }

 private:
  ByteView take(size_t n) {
    if (remaining() < n) throw std::out_of_range("message truncated");
    ByteView v = data_.subspan(off_, n);
    off_ += n;
    return v;
  }

  ByteView data_;
  size_t off_ = 0;
};

inline std::string hex_encode(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0F]);
  }
  return out;
}

inline Bytes hex_decode(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex length");
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace ssevault
