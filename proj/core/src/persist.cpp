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

#include "ssevault/persist.hpp"

#include <zlib.h>

#include <cstdlib>
#include <fstream>

#include "ssevault/bignum.hpp"

namespace ssevault {

namespace {

enum ShardRecordType : uint8_t {
  kShardMeta = 1,
  kShardEntry = 2,
  kShardBlob = 3,
  kShardTranscript = 4,
};

uint32_t crc32_of(ByteView a, ByteView b) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, a.data(), static_cast<uInt>(a.size()));
  if (!b.empty()) crc = crc32(crc, b.data(), static_cast<uInt>(b.size()));
  return static_cast<uint32_t>(crc);
}

}  // namespace

Bytes vault_serialize(VaultKind kind, const std::vector<VaultRecord>& records) {
  ByteWriter w;
  w.raw(as_bytes(kVaultMagic));
  w.u8(kind);
  for (const auto& rec : records) {
    ByteWriter head;
    head.u8(rec.type);
    head.u32(static_cast<uint32_t>(rec.payload.size()));
    w.raw(head.data());
    w.raw(rec.payload);
    w.u32(crc32_of(head.data(), rec.payload));
  }
  return w.take();
}

std::vector<VaultRecord> vault_parse(ByteView data, VaultKind expected_kind) {
  ByteReader r(data);
  Bytes magic = r.raw(kVaultMagic.size());
  if (to_string(magic) != kVaultMagic) {
    throw std::runtime_error("bad container magic (version mismatch?)");
  }
  if (r.u8() != expected_kind) throw std::runtime_error("unexpected container kind");
  std::vector<VaultRecord> records;
  while (!r.done()) {
    VaultRecord rec;
    rec.type = r.u8();
    uint32_t len = r.u32();
    rec.payload = r.raw(len);
    uint32_t stored_crc = r.u32();
    ByteWriter head;
    head.u8(rec.type);
    head.u32(len);
    if (crc32_of(head.data(), rec.payload) != stored_crc) {
      throw std::runtime_error("record checksum mismatch");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void vault_write_file(const std::filesystem::path& path, VaultKind kind,
                      const std::vector<VaultRecord>& records) {
  Bytes data = vault_serialize(kind, records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<VaultRecord> vault_read_file(const std::filesystem::path& path,
                                         VaultKind expected_kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return vault_parse(data, expected_kind);
}

std::filesystem::path data_dir(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("SSE_VAULT_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return "ssevault-data";
}

std::filesystem::path shard_file_name(const std::filesystem::path& dir, ByteView shard_addr) {
  return dir / ("shard_" + hex_encode(shard_addr) + ".ssev");
}

Bytes transcript_record_serialize(const TranscriptRecord& rec) {
  ByteWriter w;
  w.u64(rec.ts);
  w.u8(static_cast<uint8_t>(rec.kind));
  w.lp16(rec.addr);
  w.u8(static_cast<uint8_t>(rec.status));
  w.u64(rec.base);
  w.u64(rec.cur);
  w.u16(static_cast<uint16_t>(rec.extras.size()));
  for (const auto& [k, v] : rec.extras) {
    w.lp16(as_bytes(k));
    w.lp16(as_bytes(v));
  }
  return w.take();
}

TranscriptRecord transcript_record_deserialize(ByteView data) {
  ByteReader r(data);
  TranscriptRecord rec;
  rec.ts = r.u64();
  rec.kind = static_cast<TranscriptKind>(r.u8());
  rec.addr = r.lp16();
  rec.status = static_cast<WireStatus>(r.u8());
  rec.base = r.u64();
  rec.cur = r.u64();
  size_t n = r.u16();
  for (size_t i = 0; i < n; ++i) {
    std::string k = to_string(r.lp16());
    std::string v = to_string(r.lp16());
    rec.extras.emplace_back(std::move(k), std::move(v));
  }
  r.expect_done();
  return rec;
}

Bytes persist_shard_bytes(const StorageServer& server) {
  std::vector<VaultRecord> records;
  {
    ByteWriter w;
    w.lp16(server.address());
    w.u64(server.clock());
    records.push_back({kShardMeta, w.take()});
  }
  for (const auto& [addr, entry] : server.entries()) {
    ByteWriter w;
    w.lp16(addr);
    w.lp16(mpz_to_bytes(entry.r));
    w.raw(ashe_ct_serialize(entry.e));
    records.push_back({kShardEntry, w.take()});
  }
  for (const auto& [id, blob] : server.blobs()) {
    ByteWriter w;
    w.u32(id);
    w.lp32(blob);
    records.push_back({kShardBlob, w.take()});
  }
  for (const auto& rec : server.transcript()) {
    records.push_back({kShardTranscript, transcript_record_serialize(rec)});
  }
  return vault_serialize(kVaultShard, records);
}

void persist_shard(const StorageServer& server, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Bytes data = persist_shard_bytes(server);
  auto path = shard_file_name(dir, server.address());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::unique_ptr<StorageServer> load_shard(const std::filesystem::path& file,
                                          std::shared_ptr<const ChameleonEvaluator> eval) {
  auto records = vault_read_file(file, kVaultShard);
  if (records.empty() || records.front().type != kShardMeta) {
    throw std::runtime_error("shard file missing meta record");
  }
  ByteReader meta(records.front().payload);
  Bytes address = meta.lp16();
  uint64_t clock = meta.u64();
  meta.expect_done();

  std::map<Bytes, EdbEntry> entries;
  std::map<uint32_t, Bytes> blobs;
  std::vector<TranscriptRecord> transcript;
  for (size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    switch (rec.type) {
      case kShardEntry: {
        ByteReader r(rec.payload);
        Bytes addr = r.lp16();
        mpz_class witness = mpz_from_bytes(r.lp16());
        StatefulCiphertext e = ashe_ct_deserialize(
            ByteView(rec.payload).subspan(rec.payload.size() - r.remaining()));
        entries.emplace(std::move(addr), EdbEntry{witness, e});
        break;
      }
      case kShardBlob: {
        ByteReader r(rec.payload);
        uint32_t id = r.u32();
        blobs[id] = r.lp32();
        r.expect_done();
        break;
      }
      case kShardTranscript:
        transcript.push_back(transcript_record_deserialize(rec.payload));
        break;
      default:
        throw std::runtime_error("unknown shard record type");
    }
  }
  auto server = std::make_unique<StorageServer>(std::move(address), std::move(eval));
  server->restore(std::move(entries), std::move(blobs), std::move(transcript), clock);
  return server;
}

}  // namespace ssevault
