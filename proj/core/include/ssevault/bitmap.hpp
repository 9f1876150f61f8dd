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
#include <span>
#include <vector>

#include "ssevault/bitstring.hpp"

namespace ssevault {

// Membership bitmap over a file universe of gamma slots: bit i (leftmost
// first) is set when file id i matches.
BitString bitmap_from_ids(std::span<const uint32_t> ids, size_t gamma);

// XOR-delta for a single update. Adds must be absent and deletes present
// in `current`; flipping each listed slot applies both in one string.
BitString bitmap_update_string(const BitString& current, std::span<const uint32_t> add_ids,
                               std::span<const uint32_t> del_ids);

std::vector<uint32_t> bitmap_to_ids(const BitString& bitmap);

}  // namespace ssevault
