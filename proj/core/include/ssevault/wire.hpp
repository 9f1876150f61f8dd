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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssevault/ashe.hpp"
#include "ssevault/bytes.hpp"

namespace ssevault {

// [4-byte big-endian length][1-byte type][payload], length = 1 + |payload|.
struct Frame {
  uint8_t msg_type = 0;
  Bytes payload;

  bool operator==(const Frame&) const = default;
};

enum MsgType : uint8_t {
  kMsgSearch = 0x01,
  kMsgSearchResp = 0x02,
  kMsgUpdate = 0x03,
  kMsgSwap = 0x04,
  kMsgStore = 0x05,
  kMsgFetch = 0x06,
  kMsgFetchResp = 0x07,
  kMsgAck = 0x08,
  kMsgRegister = 0x10,
  kMsgResolve = 0x11,
};

enum class WireStatus : uint8_t {
  kOk = 0,
  kRejected = 1,
  kNotFound = 2,
  kDuplicate = 3,
  kStateGap = 4,
  kMalformed = 5,
};

inline constexpr size_t kMaxFrameLen = 64u << 20;

enum class DecodeResult { kOk, kNeedMore, kError };

Bytes frame_encode(const Frame& frame);

// Consumes at most one frame from the front of `in`. kNeedMore leaves
// `consumed` untouched; kError means the stream is unrecoverable.
DecodeResult frame_decode(ByteView in, Frame& out, size_t& consumed);

bool msg_type_known(uint8_t t);

// Payload shapes. All scalars and group elements travel as length-prefixed
// big-endian magnitudes; these structs are the entire server-visible
// vocabulary, so key material has no wire representation by construction.
struct WireSearch {
  Bytes trap1, trap2;
};
struct WireSearchResp {
  WireStatus status = WireStatus::kMalformed;
  std::optional<StatefulCiphertext> result;
};
struct WireUpdate {
  Bytes addr;
  StatefulCiphertext e_up;
};
struct WireSwap {
  Bytes addr, r_new;
};
struct WireStoreEntry {
  Bytes addr, r;
  StatefulCiphertext e;
};
struct WireStoreBlob {
  uint32_t file_id = 0;
  Bytes data;
};
struct WireStore {
  std::optional<WireStoreEntry> entry;  // exactly one of entry/blob is set
  std::optional<WireStoreBlob> blob;
};
struct WireFetch {
  std::vector<uint32_t> file_ids;
};
struct WireFetchResp {
  WireStatus status = WireStatus::kMalformed;
  std::vector<std::pair<uint32_t, std::optional<Bytes>>> blobs;  // request order
};
struct WireAck {
  WireStatus status = WireStatus::kMalformed;
  Bytes extra;  // registry resolve carries the endpoint here
};
struct WireRegister {
  Bytes addr;
  std::string endpoint;
};
struct WireResolve {
  Bytes addr;
};

Frame encode_search(const WireSearch& m);
Frame encode_search_resp(const WireSearchResp& m);
Frame encode_update(const WireUpdate& m);
Frame encode_swap(const WireSwap& m);
Frame encode_store(const WireStore& m);
Frame encode_fetch(const WireFetch& m);
Frame encode_fetch_resp(const WireFetchResp& m);
Frame encode_ack(const WireAck& m);
Frame encode_register(const WireRegister& m);
Frame encode_resolve(const WireResolve& m);

// Parsers throw std::exception subclasses on malformed payloads.
WireSearch parse_search(const Frame& f);
WireSearchResp parse_search_resp(const Frame& f);
WireUpdate parse_update(const Frame& f);
WireSwap parse_swap(const Frame& f);
WireStore parse_store(const Frame& f);
WireFetch parse_fetch(const Frame& f);
WireFetchResp parse_fetch_resp(const Frame& f);
WireAck parse_ack(const Frame& f);
WireRegister parse_register(const Frame& f);
WireResolve parse_resolve(const Frame& f);

}  // namespace ssevault
