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

#include "ssevault/bitstring.hpp"
#include "ssevault/bytes.hpp"
#include "ssevault/prf.hpp"

namespace ssevault {

struct AsheKey {
  PrfKey key;
};

// XOR-homomorphic stateful ciphertext covering the state interval
// [base, cur]. A fresh encryption at state i covers [i, i]; adding two
// ciphertexts with adjacent intervals telescopes the shared pad away.
struct StatefulCiphertext {
  BitString body;
  uint64_t base = 0;
  uint64_t cur = 0;

  bool operator==(const StatefulCiphertext&) const = default;
};

// Keystream pad for one state index.
BitString ashe_pad(const AsheKey& key, uint64_t state, size_t nbits);

// Encrypts at state >= 1: body = m ^ pad(state) ^ pad(state - 1).
StatefulCiphertext ashe_encrypt(const AsheKey& key, const BitString& m, uint64_t state);

BitString ashe_decrypt(const AsheKey& key, const StatefulCiphertext& c);

// True when `newer` starts exactly where `older` ends.
bool ashe_can_add(const StatefulCiphertext& older, const StatefulCiphertext& newer);

// Homomorphic sum over the joined interval [older.base, newer.cur].
StatefulCiphertext ashe_add(const StatefulCiphertext& older, const StatefulCiphertext& newer);

// [u64 base][u64 cur][u32 bit length][packed body]
Bytes ashe_ct_serialize(const StatefulCiphertext& c);
StatefulCiphertext ashe_ct_deserialize(ByteView data);

}  // namespace ssevault
