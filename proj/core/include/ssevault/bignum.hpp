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

#include "ssevault/bytes.hpp"
#include "ssevault/rng.hpp"

namespace ssevault {

// Minimal big-endian magnitude; zero encodes as the empty string.
inline Bytes mpz_to_bytes(const mpz_class& v) {
  if (v < 0) throw std::invalid_argument("negative bignum");
  size_t n = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  if (v == 0) return {};
  Bytes out(n);
  size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(written);
  return out;
}

// Big-endian magnitude, left-padded to a fixed width.
inline Bytes mpz_to_fixed(const mpz_class& v, size_t width) {
  Bytes mag = mpz_to_bytes(v);
  if (mag.size() > width) throw std::invalid_argument("bignum exceeds field width");
  Bytes out(width, 0);
  std::copy(mag.begin(), mag.end(), out.end() - mag.size());
  return out;
}

inline mpz_class mpz_from_bytes(ByteView b) {
  mpz_class v;
  if (!b.empty()) mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
  return v;
}

// Uniform scalar in [1, q-1].
inline mpz_class sample_scalar(DetRng& rng, const mpz_class& q) {
  size_t nbytes = (mpz_sizeinbase(q.get_mpz_t(), 2) + 7) / 8 + 8;
  mpz_class v = mpz_from_bytes(rng.bytes(nbytes));
  return v % (q - 1) + 1;
}

inline size_t scalar_width(const mpz_class& q) {
  return (mpz_sizeinbase(q.get_mpz_t(), 2) + 7) / 8;
}

}  // namespace ssevault
