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

#include "ssevault/server.hpp"

#include "ssevault/bignum.hpp"

namespace ssevault {

StorageServer::StorageServer(Bytes shard_address,
                             std::shared_ptr<const ChameleonEvaluator> eval)
    : address_(std::move(shard_address)), eval_(std::move(eval)) {
  if (!eval_) throw std::invalid_argument("missing chameleon evaluator");
}

void StorageServer::log(TranscriptKind kind, Bytes addr, WireStatus status,
                        uint64_t base, uint64_t cur) {
  TranscriptRecord rec;
  rec.ts = ++clock_;
  rec.kind = kind;
  rec.addr = std::move(addr);
  rec.status = status;
  rec.base = base;
  rec.cur = cur;
  if (tap_) tap_(rec);
  transcript_.push_back(std::move(rec));
}

SearchReply StorageServer::handle_search(const mpz_class& trap1, const mpz_class& trap2) {
  std::lock_guard lock(mu_);
  Bytes addr = mpz_to_bytes(trap1);
  SearchReply reply;
  auto it = entries_.find(addr);
  if (it == entries_.end()) {
    reply.status = WireStatus::kNotFound;
    log(TranscriptKind::kSearch, addr, reply.status, 0, 0);
    return reply;
  }
  if (eval_->hash(trap2, it->second.r) != trap1) {
    reply.status = WireStatus::kRejected;
    log(TranscriptKind::kSearch, addr, reply.status, 0, 0);
    return reply;
  }
  reply.status = WireStatus::kOk;
  reply.result = it->second.e;
  log(TranscriptKind::kSearch, addr, reply.status, it->second.e.base, it->second.e.cur);
  return reply;
}

WireStatus StorageServer::apply_update(const Bytes& addr, const StatefulCiphertext& e_up) {
  std::lock_guard lock(mu_);
  auto it = entries_.find(addr);
  WireStatus status;
  if (it == entries_.end()) {
    status = WireStatus::kNotFound;
  } else if (!ashe_can_add(it->second.e, e_up)) {
    status = WireStatus::kStateGap;
  } else {
    it->second.e = ashe_add(it->second.e, e_up);
    status = WireStatus::kOk;
  }
  log(TranscriptKind::kUpdate, addr, status, e_up.base, e_up.cur);
  return status;
}

WireStatus StorageServer::swap_witness(const Bytes& addr, const mpz_class& r_new) {
  std::lock_guard lock(mu_);
  auto it = entries_.find(addr);
  WireStatus status;
  if (it == entries_.end()) {
    status = WireStatus::kNotFound;
  } else {
    it->second.r = r_new;
    status = WireStatus::kOk;
  }
  log(TranscriptKind::kRevoke, addr, status, 0, 0);
  return status;
}

WireStatus StorageServer::store_entry(const Bytes& addr, const mpz_class& r,
                                      const StatefulCiphertext& e) {
  std::lock_guard lock(mu_);
  WireStatus status;
  if (entries_.contains(addr)) {
    status = WireStatus::kDuplicate;
  } else {
    entries_.emplace(addr, EdbEntry{r, e});
    status = WireStatus::kOk;
  }
  log(TranscriptKind::kStore, addr, status, e.base, e.cur);
  return status;
}

WireStatus StorageServer::remove_entry(const Bytes& addr) {
  std::lock_guard lock(mu_);
  WireStatus status = entries_.erase(addr) > 0 ? WireStatus::kOk : WireStatus::kNotFound;
  log(TranscriptKind::kStore, addr, status, 0, 0);
  return status;
}

WireStatus StorageServer::store_blob(uint32_t file_id, Bytes data) {
  std::lock_guard lock(mu_);
  blobs_[file_id] = std::move(data);
  log(TranscriptKind::kStore, {}, WireStatus::kOk, 0, 0);
  return WireStatus::kOk;
}

std::vector<std::pair<uint32_t, std::optional<Bytes>>> StorageServer::fetch_blobs(
    const std::vector<uint32_t>& file_ids) {
  std::lock_guard lock(mu_);
  std::vector<std::pair<uint32_t, std::optional<Bytes>>> out;
  out.reserve(file_ids.size());
  for (uint32_t id : file_ids) {
    auto it = blobs_.find(id);
    if (it == blobs_.end()) {
      out.emplace_back(id, std::nullopt);
    } else {
      out.emplace_back(id, it->second);
    }
  }
  log(TranscriptKind::kFetch, {}, WireStatus::kOk, 0, 0);
  return out;
}

std::vector<TranscriptRecord> StorageServer::transcript() const {
  std::lock_guard lock(mu_);
  return transcript_;
}

void StorageServer::restore(std::map<Bytes, EdbEntry> entries, std::map<uint32_t, Bytes> blobs,
                            std::vector<TranscriptRecord> transcript, uint64_t clock) {
  std::lock_guard lock(mu_);
  entries_ = std::move(entries);
  blobs_ = std::move(blobs);
  transcript_ = std::move(transcript);
  clock_ = clock;
}

Frame dispatch_frame(StorageServer& server, const Frame& request) {
  try {
    switch (request.msg_type) {
      case kMsgSearch: {
        WireSearch m = parse_search(request);
        SearchReply reply =
            server.handle_search(mpz_from_bytes(m.trap1), mpz_from_bytes(m.trap2));
        return encode_search_resp({reply.status, reply.result});
      }
      case kMsgUpdate: {
        WireUpdate m = parse_update(request);
        return encode_ack({server.apply_update(m.addr, m.e_up), {}});
      }
      case kMsgSwap: {
        WireSwap m = parse_swap(request);
        return encode_ack({server.swap_witness(m.addr, mpz_from_bytes(m.r_new)), {}});
      }
      case kMsgStore: {
        WireStore m = parse_store(request);
        if (m.entry) {
          return encode_ack(
              {server.store_entry(m.entry->addr, mpz_from_bytes(m.entry->r), m.entry->e), {}});
        }
        return encode_ack({server.store_blob(m.blob->file_id, std::move(m.blob->data)), {}});
      }
      case kMsgFetch: {
        WireFetch m = parse_fetch(request);
        return encode_fetch_resp({WireStatus::kOk, server.fetch_blobs(m.file_ids)});
      }
      default:
        return encode_ack({WireStatus::kMalformed, {}});
    }
  } catch (const std::exception&) {
    return encode_ack({WireStatus::kMalformed, {}});
  }
}

}  // namespace ssevault
