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

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "ssevault/bytes.hpp"
#include "ssevault/chameleon.hpp"
#include "ssevault/server.hpp"

namespace ssevault {

// Container format "SSEV1": magic, one file-kind byte, then records of
// [1-byte type][4-byte big-endian length][payload][4-byte CRC-32], where the
// checksum covers type, length, and payload.
inline constexpr std::string_view kVaultMagic = "SSEV1";

enum VaultKind : uint8_t {
  kVaultOwner = 1,
  kVaultShard = 2,
  kVaultBulletin = 3,
  kVaultClient = 4,
};

struct VaultRecord {
  uint8_t type = 0;
  Bytes payload;
};

Bytes vault_serialize(VaultKind kind, const std::vector<VaultRecord>& records);

// Throws std::runtime_error on bad magic (version mismatch) or checksum
// failure.
std::vector<VaultRecord> vault_parse(ByteView data, VaultKind expected_kind);

void vault_write_file(const std::filesystem::path& path, VaultKind kind,
                      const std::vector<VaultRecord>& records);
std::vector<VaultRecord> vault_read_file(const std::filesystem::path& path,
                                         VaultKind expected_kind);

// Persistence root: explicit argument wins, then SSE_VAULT_DATA_DIR, then
// ./ssevault-data.
std::filesystem::path data_dir(const std::string& override_dir = "");

std::filesystem::path shard_file_name(const std::filesystem::path& dir, ByteView shard_addr);

// Shard state roundtrips byte-exactly: entries, blobs, transcript, clock.
Bytes persist_shard_bytes(const StorageServer& server);
void persist_shard(const StorageServer& server, const std::filesystem::path& dir);
std::unique_ptr<StorageServer> load_shard(const std::filesystem::path& file,
                                          std::shared_ptr<const ChameleonEvaluator> eval);

Bytes transcript_record_serialize(const TranscriptRecord& rec);
TranscriptRecord transcript_record_deserialize(ByteView data);

}  // namespace ssevault
