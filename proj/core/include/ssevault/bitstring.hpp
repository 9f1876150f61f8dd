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
#include <stdexcept>
#include <string>

#include "ssevault/bytes.hpp"

namespace ssevault {

// Fixed-width bit string packed MSB-first: bit 0 is the leftmost bit of
// byte 0. Trailing pad bits in the last byte are always zero, so equal
// bit strings have equal byte representations.
class BitString {
 public:
  BitString() = default;

  explicit BitString(size_t nbits) : nbits_(nbits), data_((nbits + 7) / 8, 0) {}

  static BitString from_bytes(Bytes data, size_t nbits) {
    if (data.size() != (nbits + 7) / 8) throw std::invalid_argument("bit length mismatch");
    BitString b;
    b.nbits_ = nbits;
    b.data_ = std::move(data);
    b.mask_pad();
    return b;
  }

  static BitString parse(std::string_view s) {
    BitString b(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        b.set(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("bit string must contain only 0 and 1");
      }
    }
    return b;
  }

  size_t size() const { return nbits_; }

  bool get(size_t i) const {
    check(i);
    return (data_[i / 8] >> (7 - i % 8)) & 1;
  }

  void set(size_t i, bool v) {
    check(i);
    uint8_t mask = static_cast<uint8_t>(1u << (7 - i % 8));
    if (v) {
      data_[i / 8] |= mask;
    } else {
      data_[i / 8] &= static_cast<uint8_t>(~mask);
    }
  }

  void flip(size_t i) { set(i, !get(i)); }

  BitString& operator^=(const BitString& other) {
    if (other.nbits_ != nbits_) throw std::invalid_argument("bit length mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
    return *this;
  }

  friend BitString operator^(BitString a, const BitString& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitString& other) const = default;

  bool any() const {
    for (uint8_t b : data_) {
      if (b != 0) return true;
    }
    return false;
  }

  size_t count() const {
    size_t n = 0;
    for (size_t i = 0; i < nbits_; ++i) n += get(i);
    return n;
  }

  const Bytes& bytes() const { return data_; }

  std::string to_string() const {
    std::string s(nbits_, '0');
    for (size_t i = 0; i < nbits_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

 private:
  void check(size_t i) const {
    if (i >= nbits_) throw std::out_of_range("bit index out of range");
  }

  void mask_pad() {
    if (nbits_ % 8 != 0 && !data_.empty()) {
      data_.back() &= static_cast<uint8_t>(0xFF << (8 - nbits_ % 8));
    }
  }

  size_t nbits_ = 0;
  Bytes data_;
};

}  // namespace ssevault
