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

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ssevault/ashe.hpp"
#include "ssevault/chameleon.hpp"
#include "ssevault/wire.hpp"

namespace ssevault {

struct EdbEntry {
  mpz_class r;            // current collision witness
  StatefulCiphertext e;   // folded bitmap ciphertext
};

enum class TranscriptKind : uint8_t {
  kSearch = 1,
  kUpdate = 2,
  kRevoke = 3,
  kStore = 4,
  kFetch = 5,
};

// One observed message. Everything a shard may record about an operation:
// logical timestamp, message kind, target address, outcome, and the
// ciphertext interval. The leakage auditor rejects anything further, which
// is why `extras` exists: test fixtures use it to prove the auditor notices.
struct TranscriptRecord {
  uint64_t ts = 0;
  TranscriptKind kind = TranscriptKind::kSearch;
  Bytes addr;
  WireStatus status = WireStatus::kOk;
  uint64_t base = 0;
  uint64_t cur = 0;
  std::vector<std::pair<std::string, std::string>> extras;

  bool operator==(const TranscriptRecord&) const = default;
};

struct SearchReply {
  WireStatus status = WireStatus::kNotFound;
  std::optional<StatefulCiphertext> result;
};

// One storage shard: a slice of the encrypted index keyed by chameleon
// address, plus opaque file blobs. Searches verify the trapdoor relation
// trap1 == H(trap2, r); updates fold ciphertexts homomorphically; witness
// swaps implement revocation without touching ciphertexts.
class StorageServer {
 public:
  StorageServer(Bytes shard_address, std::shared_ptr<const ChameleonEvaluator> eval);

  const Bytes& address() const { return address_; }

  SearchReply handle_search(const mpz_class& trap1, const mpz_class& trap2);
  WireStatus apply_update(const Bytes& addr, const StatefulCiphertext& e_up);
  WireStatus swap_witness(const Bytes& addr, const mpz_class& r_new);
  WireStatus store_entry(const Bytes& addr, const mpz_class& r, const StatefulCiphertext& e);
  WireStatus remove_entry(const Bytes& addr);
  WireStatus store_blob(uint32_t file_id, Bytes data);
  std::vector<std::pair<uint32_t, std::optional<Bytes>>> fetch_blobs(
      const std::vector<uint32_t>& file_ids);

  const std::map<Bytes, EdbEntry>& entries() const { return entries_; }
  const std::map<uint32_t, Bytes>& blobs() const { return blobs_; }
  std::vector<TranscriptRecord> transcript() const;
  uint64_t clock() const { return clock_; }

  // Test-fixture hook: runs on every appended record, may add fields. The
  // production configuration never installs one.
  using TranscriptTap = std::function<void(TranscriptRecord&)>;
  void set_transcript_tap(TranscriptTap tap) { tap_ = std::move(tap); }

  // Persistence support: reinstalls state exactly as captured.
  void restore(std::map<Bytes, EdbEntry> entries, std::map<uint32_t, Bytes> blobs,
               std::vector<TranscriptRecord> transcript, uint64_t clock);

 private:
  void log(TranscriptKind kind, Bytes addr, WireStatus status, uint64_t base, uint64_t cur);

  Bytes address_;
  std::shared_ptr<const ChameleonEvaluator> eval_;
  std::map<Bytes, EdbEntry> entries_;
  std::map<uint32_t, Bytes> blobs_;
  std::vector<TranscriptRecord> transcript_;
  uint64_t clock_ = 0;
  TranscriptTap tap_;
  mutable std::mutex mu_;
};

// Shared server-side demux used by every transport, so in-process and TCP
// deployments execute identical logic per frame.
Frame dispatch_frame(StorageServer& server, const Frame& request);

}  // namespace ssevault
