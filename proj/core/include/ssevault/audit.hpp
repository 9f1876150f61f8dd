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

#include <map>
#include <string>
#include <vector>

#include "ssevault/owner.hpp"
#include "ssevault/server.hpp"

namespace ssevault {

struct ShardTranscript {
  Bytes shard_addr;
  std::vector<TranscriptRecord> records;
};

// What the servers were allowed to see, reconstructed from transcripts, next
// to the owner-side ground truth. The verdict is PASS exactly when every
// transcript field is a function of {addr, timestamp, ciphertext interval,
// status} and update records carry nothing beyond timestamp and address.
struct LeakageReport {
  bool pass = false;
  std::vector<std::string> offending_fields;

  // Search pattern sp(w): per address, the timestamps it was searched at.
  std::map<std::string, std::vector<uint64_t>> sp;
  // Updates(w): per address, the timestamps of updates.
  std::map<std::string, std::vector<uint64_t>> updates;
  // UpHist(w): per address, (timestamp, op-unknown marker) pairs.
  std::map<std::string, std::vector<std::pair<uint64_t, std::string>>> up_hist;
  // TimeDB(w): per keyword, surviving (insertion timestamp, file id) pairs,
  // derived purely from owner ground truth.
  std::map<std::string, std::vector<std::pair<uint64_t, uint32_t>>> time_db;

  std::string summary() const;
};

LeakageReport audit_leakage(const std::vector<ShardTranscript>& transcripts,
                            const std::vector<GroundTruthEvent>& ground_truth);

}  // namespace ssevault
