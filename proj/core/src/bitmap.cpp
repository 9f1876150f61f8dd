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

#include "ssevault/bitmap.hpp"

#include <stdexcept>

namespace ssevault {

BitString bitmap_from_ids(std::span<const uint32_t> ids, size_t gamma) {
  BitString b(gamma);
  for (uint32_t id : ids) {
    if (id >= gamma) throw std::out_of_range("file id outside bitmap width");
    b.set(id, true);
  }
  return b;
}

BitString bitmap_update_string(const BitString& current, std::span<const uint32_t> add_ids,
                               std::span<const uint32_t> del_ids) {
  BitString delta(current.size());
  for (uint32_t id : add_ids) {
    if (id >= current.size()) throw std::out_of_range("file id outside bitmap width");
    if (current.get(id)) throw std::invalid_argument("add of file already present");
    if (delta.get(id)) throw std::invalid_argument("duplicate id in update");
    delta.set(id, true);
  }
  for (uint32_t id : del_ids) {
    if (id >= current.size()) throw std::out_of_range("file id outside bitmap width");
    if (!current.get(id)) throw std::invalid_argument("delete of file not present");
    if (delta.get(id)) throw std::invalid_argument("duplicate id in update");
    delta.set(id, true);
  }
  return delta;
}

std::vector<uint32_t> bitmap_to_ids(const BitString& bitmap) {
  std::vector<uint32_t> ids;
  for (size_t i = 0; i < bitmap.size(); ++i) {
    if (bitmap.get(i)) ids.push_back(static_cast<uint32_t>(i));
  }
  return ids;
}

}  // namespace ssevault
