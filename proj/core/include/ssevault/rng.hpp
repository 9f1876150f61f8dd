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
#include <random>
#include <sstream>
#include <string>

#include "ssevault/bytes.hpp"

namespace ssevault {

// Deterministic byte source. Every randomized operation in the library takes
// one of these so whole runs replay bit-for-bit from a seed.
class DetRng {
 public:
  explicit DetRng(uint64_t seed) : gen_(seed) {}

  uint64_t u64() { return gen_(); }

  // Unbiased draw from [0, bound) by rejection.
  uint64_t u64_below(uint64_t bound) {
    if (bound == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

  void fill(uint8_t* out, size_t n) {
    size_t i = 0;
    while (i < n) {
      uint64_t v = gen_();
      for (int s = 56; s >= 0 && i < n; s -= 8) out[i++] = static_cast<uint8_t>(v >> s);
    }
  }

  Bytes bytes(size_t n) {
    Bytes out(n);
    fill(out.data(), n);
    return out;
  }

  // Derives an independent stream for a labelled sub-task so the caller's
  // draw sequence stays stable when sub-task internals change.
  DetRng fork() { return DetRng(gen_() ^ 0x9E3779B97F4A7C15ull); }

  std::string save_state() const {
    std::ostringstream os;
    os << gen_;
    return os.str();
  }

  void load_state(const std::string& s) {
    std::istringstream is(s);
    is >> gen_;
    if (!is) throw std::invalid_argument("bad rng state");
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ssevault
