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

#include "ssevault/ashe.hpp"

#include <stdexcept>

namespace ssevault {

BitString ashe_pad(const AsheKey& key, uint64_t state, size_t nbits) {
  ByteWriter w;
  w.u64(state);
  Bytes stream = prf_expand(key.key, w.data(), (nbits + 7) / 8);
  if (nbits % 8 != 0) stream.back() &= static_cast<uint8_t>(0xFF << (8 - nbits % 8));
  return BitString::from_bytes(std::move(stream), nbits);
}

StatefulCiphertext ashe_encrypt(const AsheKey& key, const BitString& m, uint64_t state) {
  if (state == 0) throw std::invalid_argument("encryption state starts at 1");
  StatefulCiphertext c;
  c.body = m ^ ashe_pad(key, state, m.size()) ^ ashe_pad(key, state - 1, m.size());
  c.base = state;
  c.cur = state;
  return c;
}

BitString ashe_decrypt(const AsheKey& key, const StatefulCiphertext& c) {
  if (c.base == 0 || c.cur < c.base) throw std::invalid_argument("bad ciphertext interval");
  return c.body ^ ashe_pad(key, c.cur, c.body.size()) ^
         ashe_pad(key, c.base - 1, c.body.size());
}

bool ashe_can_add(const StatefulCiphertext& older, const StatefulCiphertext& newer) {
  return older.base != 0 && newer.base == older.cur + 1 &&
         newer.body.size() == older.body.size();
}

StatefulCiphertext ashe_add(const StatefulCiphertext& older, const StatefulCiphertext& newer) {
  if (!ashe_can_add(older, newer)) throw std::invalid_argument("non-adjacent ciphertexts");
  StatefulCiphertext c;
  c.body = older.body ^ newer.body;
  c.base = older.base;
  c.cur = newer.cur;
  return c;
}

Bytes ashe_ct_serialize(const StatefulCiphertext& c) {
  ByteWriter w;
  w.u64(c.base);
  w.u64(c.cur);
  w.u32(static_cast<uint32_t>(c.body.size()));
  w.raw(c.body.bytes());
  return w.take();
}

StatefulCiphertext ashe_ct_deserialize(ByteView data) {
  ByteReader r(data);
  StatefulCiphertext c;
  c.base = r.u64();
  c.cur = r.u64();
  uint32_t nbits = r.u32();
  c.body = BitString::from_bytes(r.raw((nbits + 7) / 8), nbits);
  r.expect_done();
  return c;
}

}  // namespace ssevault
