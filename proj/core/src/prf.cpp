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

#include "ssevault/prf.hpp"

#include <openssl/hmac.h>
#include <openssl/sha.h>

#include <stdexcept>

#include "ssevault/bignum.hpp"

namespace ssevault {

namespace {

constexpr size_t kBlockLen = SHA256_DIGEST_LENGTH;

void hmac_block(const PrfKey& key, ByteView input, uint64_t counter,
                uint8_t out[kBlockLen]) {
  Bytes msg(input.begin(), input.end());
  for (int s = 56; s >= 0; s -= 8) msg.push_back(static_cast<uint8_t>(counter >> s));
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.k.data(), static_cast<int>(key.k.size()), msg.data(),
           msg.size(), out, &len) == nullptr ||
      len != kBlockLen) {
    throw std::runtime_error("HMAC failure");
  }
}

}  // namespace

PrfKey prf(const PrfKey& key, ByteView input) {
  uint8_t block[kBlockLen];
  hmac_block(key, input, 0, block);
  PrfKey out;
  std::copy(block, block + kPrfKeyLen, out.k.begin());
  return out;
}

Bytes prf_expand(const PrfKey& key, ByteView input, size_t out_len) {
  Bytes out;
  out.reserve(out_len);
  uint8_t block[kBlockLen];
  for (uint64_t counter = 0; out.size() < out_len; ++counter) {
    hmac_block(key, input, counter, block);
    size_t take = std::min(out_len - out.size(), kBlockLen);
    out.insert(out.end(), block, block + take);
  }
  return out;
}

mpz_class h1(ByteView input, const mpz_class& q) {
  if (q < 3) throw std::invalid_argument("q too small");
  size_t want = (mpz_sizeinbase(q.get_mpz_t(), 2) + 64 + 7) / 8;
  Bytes stream;
  stream.reserve(want);
  for (uint32_t counter = 0; stream.size() < want; ++counter) {
    Bytes msg;
    for (int s = 24; s >= 0; s -= 8) msg.push_back(static_cast<uint8_t>(counter >> s));
    msg.insert(msg.end(), input.begin(), input.end());
    uint8_t digest[kBlockLen];
    SHA256(msg.data(), msg.size(), digest);
    size_t take = std::min(want - stream.size(), kBlockLen);
    stream.insert(stream.end(), digest, digest + take);
  }
  mpz_class v = mpz_from_bytes(stream);
  return v % (q - 1) + 1;
}

}  // namespace ssevault
