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

#include "ssevault/client.hpp"

#include <stdexcept>

#include "ssevault/bignum.hpp"
#include "ssevault/bitmap.hpp"

namespace ssevault {

Client::Client(IssuedCredentials creds, std::shared_ptr<const ChameleonEvaluator> eval)
    : creds_(creds), eval_(std::move(eval)) {
  if (!eval_) throw std::invalid_argument("missing chameleon evaluator");
}

bool Client::recover_pathkey(const Bulletin& bulletin) {
  auto token = bulletin.path_token(creds_.id);
  if (!token) return false;
  auto pk = recover_path_key(*token, creds_.k_id);
  if (!pk) return false;
  pathkey_ = std::move(*pk);
  return true;
}

const PathKey& Client::pathkey() const {
  if (!pathkey_) throw std::logic_error("path key not recovered");
  return *pathkey_;
}

std::optional<UnlockedKeyword> Client::unlock_keyword(const Bulletin& bulletin,
                                                      const Label16& l_w) {
  if (!pathkey_ || !bulletin.params()) return std::nullopt;
  const PubTokenRecord* record = bulletin.pub_tokens(l_w);
  if (record == nullptr) return std::nullopt;

  CoverSet cover;
  cover.reserve(record->masks.size());
  for (const auto& [node, mask] : record->masks) cover.push_back(node);
  std::sort(cover.begin(), cover.end());
  auto hit = common_cover_key(*pathkey_, cover);
  if (!hit) return std::nullopt;

  const Bytes* mask = nullptr;
  for (const auto& [node, m] : record->masks) {
    if (node == hit->first) mask = &m;
  }
  const mpz_class& q = bulletin.params()->q;
  size_t width = scalar_width(q);
  size_t want = 3 * kPrfKeyLen + 3 * width;  // k_dht, k3, chk + three scalars
  if (mask == nullptr || mask->size() != want) return std::nullopt;

  Bytes pad = prf_expand(hit->second, {l_w.data(), l_w.size()}, mask->size());
  Bytes plain(mask->size());
  for (size_t i = 0; i < plain.size(); ++i) plain[i] = (*mask)[i] ^ pad[i];

  ByteReader r(plain);
  UnlockedKeyword entry;
  entry.attribute = record->attribute;
  entry.label = l_w;
  entry.version = record->version;
  entry.k_dht = PrfKey::from_bytes(r.raw(kPrfKeyLen));
  entry.k1 = mpz_from_bytes(r.raw(width));
  entry.k2 = mpz_from_bytes(r.raw(width));
  entry.k3 = AsheKey{PrfKey::from_bytes(r.raw(kPrfKeyLen))};
  entry.r_secret = mpz_from_bytes(r.raw(width));
  Bytes check = r.raw(kPrfKeyLen);
  r.expect_done();

  // Fail closed: a wrong cover key or tampered token must not yield a
  // usable-looking credential.
  PrfKey expect = prf(entry.k3.key, as_bytes("chk"));
  if (!std::equal(check.begin(), check.end(), expect.k.begin(), expect.k.end())) {
    return std::nullopt;
  }
  auto in_range = [&](const mpz_class& v) { return v >= 1 && v < q; };
  if (!in_range(entry.k1) || !in_range(entry.k2) || !in_range(entry.r_secret)) {
    return std::nullopt;
  }
  unlocked_[l_w] = entry;
  return entry;
}

Bytes Client::locate_shard(const UnlockedKeyword& entry) const {
  PrfKey out = prf(entry.k_dht, as_bytes(entry.attribute));
  return Bytes(out.k.begin(), out.k.end());
}

Trapdoor Client::gen_trapdoor(const UnlockedKeyword& entry) const {
  return {eval_->hash(entry.k1, entry.r_secret), entry.k2};
}

std::vector<uint32_t> Client::decrypt_result(const UnlockedKeyword& entry,
                                             const StatefulCiphertext& e) const {
  return bitmap_to_ids(ashe_decrypt(entry.k3, e));
}

SearchResult Client::search(Transport& transport, const Bulletin& bulletin,
                            const Label16& l_w) {
  std::optional<UnlockedKeyword> entry;
  if (auto it = unlocked_.find(l_w); it != unlocked_.end()) {
    entry = it->second;
  } else {
    entry = unlock_keyword(bulletin, l_w);
    if (!entry) return {SearchResult::Status::kNotAuthorized, {}};
  }

  bool refreshed = false;
  for (;;) {
    Trapdoor trap = gen_trapdoor(*entry);
    auto resp = remote_search(transport, locate_shard(*entry), mpz_to_bytes(trap.trap1),
                              mpz_to_bytes(trap.trap2));
    if (!resp) return {SearchResult::Status::kUnresolvable, {}};
    switch (resp->status) {
      case WireStatus::kOk:
        return {SearchResult::Status::kFound, decrypt_result(*entry, *resp->result)};
      case WireStatus::kNotFound:
        return {SearchResult::Status::kNotFound, {}};
      case WireStatus::kRejected: {
        if (refreshed) return {SearchResult::Status::kRejected, {}};
        refreshed = true;
        auto fresh = unlock_keyword(bulletin, l_w);
        if (!fresh || fresh->version <= entry->version) {
          return {SearchResult::Status::kRejected, {}};
        }
        entry = std::move(fresh);
        break;
      }
      default:
        return {SearchResult::Status::kRejected, {}};
    }
  }
}

void Client::import_unlocked(UnlockedKeyword entry) {
  unlocked_[entry.label] = std::move(entry);
}

}  // namespace ssevault
