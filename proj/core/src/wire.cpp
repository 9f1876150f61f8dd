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

#include "ssevault/wire.hpp"

#include <stdexcept>

namespace ssevault {

bool msg_type_known(uint8_t t) {
  return (t >= kMsgSearch && t <= kMsgAck) || t == kMsgRegister || t == kMsgResolve;
}

Bytes frame_encode(const Frame& frame) {
  size_t len = 1 + frame.payload.size();
  if (len > kMaxFrameLen) throw std::length_error("frame exceeds length cap");
  ByteWriter w;
  w.u32(static_cast<uint32_t>(len));
  w.u8(frame.msg_type);
  w.raw(frame.payload);
  return w.take();
}

DecodeResult frame_decode(ByteView in, Frame& out, size_t& consumed) {
  if (in.size() < 4) return DecodeResult::kNeedMore;
  uint32_t len = 0;
  for (int i = 0; i < 4; ++i) len = len << 8 | in[i];
  if (len < 1 || len > kMaxFrameLen) return DecodeResult::kError;
  if (in.size() < 4 + static_cast<size_t>(len)) return DecodeResult::kNeedMore;
  uint8_t type = in[4];
  if (!msg_type_known(type)) return DecodeResult::kError;
  out.msg_type = type;
  out.payload.assign(in.begin() + 5, in.begin() + 4 + len);
  consumed = 4 + static_cast<size_t>(len);
  return DecodeResult::kOk;
}

namespace {

Frame make_frame(uint8_t type, ByteWriter&& w) {
  return Frame{type, w.take()};
}

void put_ct(ByteWriter& w, const StatefulCiphertext& c) {
  w.raw(ashe_ct_serialize(c));
}

StatefulCiphertext get_ct(ByteReader& r) {
  // [u64 base][u64 cur][u32 bit length][body]
  Bytes head = r.raw(20);
  ByteReader hr(head);
  hr.u64();
  hr.u64();
  uint32_t nbits = hr.u32();
  Bytes body = r.raw((nbits + 7) / 8);
  Bytes full = head;
  full.insert(full.end(), body.begin(), body.end());
  return ashe_ct_deserialize(full);
}

void check_type(const Frame& f, uint8_t want) {
  if (f.msg_type != want) throw std::runtime_error("unexpected message type");
}

}  // namespace

Frame encode_search(const WireSearch& m) {
  ByteWriter w;
  w.lp16(m.trap1);
  w.lp16(m.trap2);
  return make_frame(kMsgSearch, std::move(w));
}

WireSearch parse_search(const Frame& f) {
  check_type(f, kMsgSearch);
  ByteReader r(f.payload);
  WireSearch m;
  m.trap1 = r.lp16();
  m.trap2 = r.lp16();
  r.expect_done();
  return m;
}

Frame encode_search_resp(const WireSearchResp& m) {
  ByteWriter w;
  w.u8(static_cast<uint8_t>(m.status));
  if (m.status == WireStatus::kOk) {
    if (!m.result) throw std::invalid_argument("ok response without ciphertext");
    put_ct(w, *m.result);
  }
  return make_frame(kMsgSearchResp, std::move(w));
}

WireSearchResp parse_search_resp(const Frame& f) {
  check_type(f, kMsgSearchResp);
  ByteReader r(f.payload);
  WireSearchResp m;
  m.status = static_cast<WireStatus>(r.u8());
  if (m.status == WireStatus::kOk) m.result = get_ct(r);
  r.expect_done();
  return m;
}

Frame encode_update(const WireUpdate& m) {
  ByteWriter w;
  w.lp16(m.addr);
  put_ct(w, m.e_up);
  return make_frame(kMsgUpdate, std::move(w));
}

WireUpdate parse_update(const Frame& f) {
  check_type(f, kMsgUpdate);
  ByteReader r(f.payload);
  WireUpdate m;
  m.addr = r.lp16();
  m.e_up = get_ct(r);
  r.expect_done();
  return m;
}

Frame encode_swap(const WireSwap& m) {
  ByteWriter w;
  w.lp16(m.addr);
  w.lp16(m.r_new);
  return make_frame(kMsgSwap, std::move(w));
}

WireSwap parse_swap(const Frame& f) {
  check_type(f, kMsgSwap);
  ByteReader r(f.payload);
  WireSwap m;
  m.addr = r.lp16();
  m.r_new = r.lp16();
  r.expect_done();
  return m;
}

Frame encode_store(const WireStore& m) {
  ByteWriter w;
  if (m.entry.has_value() == m.blob.has_value()) {
    throw std::invalid_argument("store carries exactly one of entry/blob");
  }
  if (m.entry) {
    w.u8(0);
    w.lp16(m.entry->addr);
    w.lp16(m.entry->r);
    put_ct(w, m.entry->e);
  } else {
    w.u8(1);
    w.u32(m.blob->file_id);
    w.lp32(m.blob->data);
  }
  return make_frame(kMsgStore, std::move(w));
}

WireStore parse_store(const Frame& f) {
  check_type(f, kMsgStore);
  ByteReader r(f.payload);
  WireStore m;
  uint8_t sub = r.u8();
  if (sub == 0) {
    WireStoreEntry e;
    e.addr = r.lp16();
    e.r = r.lp16();
    e.e = get_ct(r);
    m.entry = std::move(e);
  } else if (sub == 1) {
    WireStoreBlob b;
    b.file_id = r.u32();
    b.data = r.lp32();
    m.blob = std::move(b);
  } else {
    throw std::runtime_error("unknown store subtype");
  }
  r.expect_done();
  return m;
}

Frame encode_fetch(const WireFetch& m) {
  ByteWriter w;
  w.u16(static_cast<uint16_t>(m.file_ids.size()));
  for (uint32_t id : m.file_ids) w.u32(id);
  return make_frame(kMsgFetch, std::move(w));
}

WireFetch parse_fetch(const Frame& f) {
  check_type(f, kMsgFetch);
  ByteReader r(f.payload);
  WireFetch m;
  size_t n = r.u16();
  for (size_t i = 0; i < n; ++i) m.file_ids.push_back(r.u32());
  r.expect_done();
  return m;
}

Frame encode_fetch_resp(const WireFetchResp& m) {
  ByteWriter w;
  w.u8(static_cast<uint8_t>(m.status));
  w.u16(static_cast<uint16_t>(m.blobs.size()));
  for (const auto& [id, data] : m.blobs) {
    w.u32(id);
    w.u8(data.has_value() ? 1 : 0);
    if (data) w.lp32(*data);
  }
  return make_frame(kMsgFetchResp, std::move(w));
}

WireFetchResp parse_fetch_resp(const Frame& f) {
  check_type(f, kMsgFetchResp);
  ByteReader r(f.payload);
  WireFetchResp m;
  m.status = static_cast<WireStatus>(r.u8());
  size_t n = r.u16();
  for (size_t i = 0; i < n; ++i) {
    uint32_t id = r.u32();
    if (r.u8() != 0) {
      m.blobs.emplace_back(id, r.lp32());
    } else {
      m.blobs.emplace_back(id, std::nullopt);
    }
  }
  r.expect_done();
  return m;
}

Frame encode_ack(const WireAck& m) {
  ByteWriter w;
  w.u8(static_cast<uint8_t>(m.status));
  w.lp16(m.extra);
  return make_frame(kMsgAck, std::move(w));
}

WireAck parse_ack(const Frame& f) {
  check_type(f, kMsgAck);
  ByteReader r(f.payload);
  WireAck m;
  m.status = static_cast<WireStatus>(r.u8());
  m.extra = r.lp16();
  r.expect_done();
  return m;
}

Frame encode_register(const WireRegister& m) {
  ByteWriter w;
  w.lp16(m.addr);
  w.lp16(as_bytes(m.endpoint));
  return make_frame(kMsgRegister, std::move(w));
}

WireRegister parse_register(const Frame& f) {
  check_type(f, kMsgRegister);
  ByteReader r(f.payload);
  WireRegister m;
  m.addr = r.lp16();
  m.endpoint = to_string(r.lp16());
  r.expect_done();
  return m;
}

Frame encode_resolve(const WireResolve& m) {
  ByteWriter w;
  w.lp16(m.addr);
  return make_frame(kMsgResolve, std::move(w));
}

WireResolve parse_resolve(const Frame& f) {
  check_type(f, kMsgResolve);
  ByteReader r(f.payload);
  WireResolve m;
  m.addr = r.lp16();
  r.expect_done();
  return m;
}

}  // namespace ssevault
