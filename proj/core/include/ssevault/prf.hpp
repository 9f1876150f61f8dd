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

#include <gmpxx.h>

#include <array>
#include <compare>

#include "ssevault/bytes.hpp"

namespace ssevault {

inline constexpr size_t kPrfKeyLen = 16;

struct PrfKey {
  std::array<uint8_t, kPrfKeyLen> k{};

  auto operator<=>(const PrfKey&) const = default;

  ByteView view() const { return {k.data(), k.size()}; }

  static PrfKey from_bytes(ByteView b) {
    if (b.size() != kPrfKeyLen) throw std::invalid_argument("bad PRF key length");
    PrfKey key;
    std::copy(b.begin(), b.end(), key.k.begin());
    return key;
  }
};

// Keyed PRF, HMAC-SHA256 in counter mode. prf() returns the first 16 bytes
// of the stream; prf_expand() continues the same stream, so the two agree
// on a shared prefix for equal inputs.
PrfKey prf(const PrfKey& key, ByteView input);
Bytes prf_expand(const PrfKey& key, ByteView input, size_t out_len);

// Hashes arbitrary bytes into Z*_q. Expands the input to 64 bits beyond the
// width of q before reducing, which keeps the output within 2^-64 of uniform.
mpz_class h1(ByteView input, const mpz_class& q);

}  // namespace ssevault
