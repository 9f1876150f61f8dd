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

#include "ssevault/owner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ssevault/bignum.hpp"
#include "ssevault/persist.hpp"

namespace ssevault {

namespace {

enum OwnerRecordType : uint8_t {
  kOwnerMeta = 1,
  kOwnerClients = 2,
  kOwnerAttributes = 3,
  kOwnerDhtStates = 4,
  kOwnerEpoch = 5,
  kOwnerHistory = 6,
  kOwnerRng = 7,
};

Bytes keyword_key_input(std::string_view w, uint8_t tag, uint64_t st) {
  ByteWriter in;
  in.raw(as_bytes(w));
  in.u8(tag);
  in.u64(st);
  return in.take();
}

}  // namespace

KeywordKeys derive_keyword_keys(const PrfKey& k_att, std::string_view w, uint64_t st,
                                const mpz_class& q) {
  if (st < 1) throw std::invalid_argument("keyword state starts at 1");
  KeywordKeys keys;
  keys.k1 = h1(prf(k_att, keyword_key_input(w, 0, st)).view(), q);
  keys.k2 = h1(prf(k_att, keyword_key_input(w, 1, st)).view(), q);
  keys.k3 = AsheKey{prf(k_att, keyword_key_input(w, 2, st))};
  return keys;
}

Owner Owner::init(OwnerConfig config, DetRng& rng, std::optional<ChameleonKeyPair> keys) {
  if (config.clients.empty()) throw std::invalid_argument("no clients");
  if (config.attribute_of.empty()) throw std::invalid_argument("no keywords");
  if (config.gamma < 1) throw std::invalid_argument("gamma must be positive");
  for (const auto& [w, att] : config.attribute_of) {
    if (w.empty() || att.empty()) throw std::invalid_argument("empty keyword or attribute");
  }

  Owner owner;
  owner.config_ = std::move(config);
  rng.fill(owner.mk_.k.data(), owner.mk_.k.size());
  if (keys) {
    if (!ch_validate(keys->params, keys->trapdoor)) {
      throw std::invalid_argument("invalid chameleon key pair");
    }
    owner.keys_ = std::move(*keys);
  } else {
    owner.keys_ = ch_setup(owner.config_.lambda_q, owner.config_.lambda_p, rng);
  }
  owner.eval_ = std::make_shared<ChameleonEvaluator>(owner.keys_.params);
  owner.tree_ = tree_build(owner.mk_, owner.config_.clients);
  for (const auto& [w, att] : owner.config_.attribute_of) owner.dht_states_[att] = 1;
  owner.rng_ = rng.fork();
  return owner;
}

PrfKey Owner::k_att(const std::string& attribute) const {
  ByteWriter in;
  in.raw(as_bytes("attr"));
  in.raw(as_bytes(attribute));
  return prf(mk_, in.data());
}

PrfKey Owner::k_dht(const std::string& attribute) const {
  auto it = dht_states_.find(attribute);
  if (it == dht_states_.end()) throw std::out_of_range("unknown attribute");
  ByteWriter in;
  in.raw(as_bytes("dht"));
  in.u64(it->second);
  in.raw(as_bytes(attribute));
  return prf(mk_, in.data());
}

IssuedCredentials Owner::credentials_for(uint32_t client) const {
  if (!tree_.has_client(client)) throw std::out_of_range("unknown client id");
  ByteWriter in;
  in.raw(as_bytes("id"));
  in.u32(client);
  return {client, prf(mk_, in.data())};
}

void Owner::publish_enrollment(Bulletin& bulletin) {
  bulletin.put_params(keys_.params);
  for (const auto& [client, leaf] : tree_.leaf_of()) {
    PathKey pk = path_key(tree_, client);
    bulletin.put_path_token(client, make_path_token(pk, credentials_for(client).k_id, rng_));
  }
  ++mutations_;
}

const KeywordEpoch& Owner::epoch(const std::string& keyword) const {
  auto it = epochs_.find(keyword);
  if (it == epochs_.end()) throw std::out_of_range("unknown keyword");
  return it->second;
}

KeywordEpoch& Owner::epoch_mut(const std::string& keyword) {
  auto it = epochs_.find(keyword);
  if (it == epochs_.end()) throw std::out_of_range("unknown keyword");
  return it->second;
}

Label16 Owner::keyword_label(const std::string& keyword) const {
  return epoch(keyword).label;
}

Bytes Owner::shard_addr(const std::string& attribute) const {
  PrfKey key = k_dht(attribute);
  PrfKey out = prf(key, as_bytes(attribute));
  return Bytes(out.k.begin(), out.k.end());
}

std::vector<ShardInit> Owner::build_edb(const std::map<std::string, std::vector<uint32_t>>& db,
                                        Bulletin& bulletin) {
  if (!epochs_.empty()) throw std::logic_error("EDB already built");
  for (const auto& [w, ids] : db) {
    if (!config_.attribute_of.contains(w)) throw std::invalid_argument("unmapped keyword: " + w);
  }

  std::map<std::string, ShardInit> shards;
  for (const auto& [att, st] : dht_states_) {
    ShardInit shard;
    shard.attribute = att;
    shard.shard_addr = shard_addr(att);
    bulletin.put_dht(att, shard.shard_addr);
    shards.emplace(att, std::move(shard));
  }

  std::set<Label16> labels;
  std::set<Bytes> addrs;
  const mpz_class& q = keys_.params.q;
  for (const auto& [w, att] : config_.attribute_of) {
    KeywordEpoch ep;
    ep.attribute = att;
    do {
      rng_.fill(ep.label.data(), ep.label.size());
    } while (!labels.insert(ep.label).second);
    ep.state = 1;
    ep.enc_state = 1;
    ep.k3_state = 1;
    ep.version = 1;
    KeywordKeys keys = derive_keyword_keys(k_att(att), w, ep.state, q);
    ep.k1 = keys.k1;
    ep.k2 = keys.k2;
    ep.k3 = keys.k3;
    ep.r_secret = sample_scalar(rng_, q);
    ep.addr = eval_->hash(ep.k1, ep.r_secret);
    mpz_class witness = ch_forge(keys_.params, keys_.trapdoor, ep.k1, ep.k2, ep.r_secret);

    auto db_it = db.find(w);
    std::vector<uint32_t> ids = db_it == db.end() ? std::vector<uint32_t>{} : db_it->second;
    std::sort(ids.begin(), ids.end());
    ep.membership = bitmap_from_ids(ids, config_.gamma);
    StatefulCiphertext e = ashe_encrypt(ep.k3, ep.membership, ep.state);

    Bytes addr_bytes = mpz_to_bytes(ep.addr);
    if (!addrs.insert(addr_bytes).second) {
      throw std::runtime_error("address collision in encrypted index");
    }
    shards.at(att).entries.emplace_back(addr_bytes, witness, e);

    if (!ids.empty()) {
      history_.push_back({++clock_, w, UpdateOp::kAdd, ids});
    }
    epochs_.emplace(w, std::move(ep));
  }
  ++mutations_;

  std::vector<ShardInit> out;
  out.reserve(shards.size());
  for (auto& [att, shard] : shards) out.push_back(std::move(shard));
  return out;
}

Bytes Owner::token_payload(const KeywordEpoch& ep) const {
  size_t width = scalar_width(keys_.params.q);
  ByteWriter w;
  w.raw(k_dht(ep.attribute).view());
  w.raw(mpz_to_fixed(ep.k1, width));
  w.raw(mpz_to_fixed(ep.k2, width));
  w.raw(ep.k3.key.view());
  w.raw(mpz_to_fixed(ep.r_secret, width));
  w.raw(prf(ep.k3.key, as_bytes("chk")).view());
  return w.take();
}

std::vector<PubToken> Owner::issue_tokens(const KeywordEpoch& ep,
                                          const std::set<uint32_t>& members,
                                          Bulletin& bulletin) {
  std::vector<PubToken> tokens;
  PubTokenRecord record;
  record.attribute = ep.attribute;
  record.version = ep.version;
  if (!members.empty()) {
    Bytes payload = token_payload(ep);
    for (uint32_t node : roots_subtrees(tree_, members)) {
      Bytes pad = prf_expand(tree_.node_key(node), {ep.label.data(), ep.label.size()},
                             payload.size());
      Bytes mask(payload.size());
      for (size_t i = 0; i < payload.size(); ++i) mask[i] = payload[i] ^ pad[i];
      record.masks.emplace_back(node, mask);
      tokens.push_back({ep.attribute, ep.label, ep.version, node, std::move(mask)});
    }
  }
  bulletin.put_pub_tokens(ep.label, std::move(record));
  return tokens;
}

std::vector<PubToken> Owner::authorize(const std::string& keyword,
                                       const std::set<uint32_t>& authorized,
                                       Bulletin& bulletin) {
  if (authorized.empty()) throw std::invalid_argument("empty authorized set");
  for (uint32_t c : authorized) {
    if (!tree_.has_client(c)) throw std::out_of_range("unknown client id");
  }
  const KeywordEpoch& ep = epoch(keyword);
  ++mutations_;
  return issue_tokens(ep, authorized, bulletin);
}

UpdateMessage Owner::make_update(const std::string& keyword, UpdateOp op,
                                 const std::vector<uint32_t>& ids) {
  KeywordEpoch& ep = epoch_mut(keyword);
  std::vector<uint32_t> adds, dels;
  if (op == UpdateOp::kAdd) {
    adds = ids;
  } else {
    dels = ids;
  }
  BitString delta = bitmap_update_string(ep.membership, adds, dels);
  ep.state += 1;
  ep.enc_state += 1;
  UpdateMessage msg;
  msg.addr = mpz_to_bytes(ep.addr);
  msg.e_up = ashe_encrypt(ep.k3, delta, ep.enc_state);
  ep.membership ^= delta;
  if (!ids.empty()) {
    std::vector<uint32_t> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    history_.push_back({++clock_, keyword, op, std::move(sorted)});
  }
  ++mutations_;
  return msg;
}

RevokeOutput Owner::revoke(const std::string& keyword, const std::set<uint32_t>& remaining,
                           Bulletin& bulletin) {
  for (uint32_t c : remaining) {
    if (!tree_.has_client(c)) throw std::out_of_range("unknown client id");
  }
  KeywordEpoch& ep = epoch_mut(keyword);
  uint64_t st_new = ep.state + 1;
  KeywordKeys fresh = derive_keyword_keys(k_att(ep.attribute), keyword, st_new,
                                          keys_.params.q);
  // Collision chain: move the randomizer to the fresh K1, then derive the
  // server-side witness for the fresh K2. The address never changes.
  mpz_class r_secret_new =
      ch_forge(keys_.params, keys_.trapdoor, ep.k1, fresh.k1, ep.r_secret);
  mpz_class witness_new =
      ch_forge(keys_.params, keys_.trapdoor, fresh.k1, fresh.k2, r_secret_new);

  ep.state = st_new;
  ep.version += 1;
  ep.k1 = fresh.k1;
  ep.k2 = fresh.k2;
  ep.r_secret = r_secret_new;
  if (eval_->hash(ep.k1, ep.r_secret) != ep.addr) {
    throw std::logic_error("revocation broke the address chain");
  }

  RevokeOutput out;
  out.swap = {mpz_to_bytes(ep.addr), witness_new};
  out.tokens = issue_tokens(ep, remaining, bulletin);
  ++mutations_;
  return out;
}

void Owner::save(const std::filesystem::path& file) const {
  std::vector<VaultRecord> records;
  {
    ByteWriter w;
    w.u32(config_.lambda_q);
    w.u32(config_.lambda_p);
    w.u64(config_.gamma);
    w.u64(clock_);
    w.u64(mutations_);
    w.raw(mk_.view());
    w.lp16(mpz_to_bytes(keys_.trapdoor.xi));
    w.lp32(ch_params_serialize(keys_.params));
    records.push_back({kOwnerMeta, w.take()});
  }
  {
    ByteWriter w;
    w.u32(static_cast<uint32_t>(config_.clients.size()));
    for (uint32_t c : config_.clients) w.u32(c);
    records.push_back({kOwnerClients, w.take()});
  }
  {
    ByteWriter w;
    w.u32(static_cast<uint32_t>(config_.attribute_of.size()));
    for (const auto& [kw, att] : config_.attribute_of) {
      w.lp16(as_bytes(kw));
      w.lp16(as_bytes(att));
    }
    records.push_back({kOwnerAttributes, w.take()});
  }
  {
    ByteWriter w;
    w.u32(static_cast<uint32_t>(dht_states_.size()));
    for (const auto& [att, st] : dht_states_) {
      w.lp16(as_bytes(att));
      w.u64(st);
    }
    records.push_back({kOwnerDhtStates, w.take()});
  }
  for (const auto& [kw, ep] : epochs_) {
    ByteWriter w;
    w.lp16(as_bytes(kw));
    w.lp16(as_bytes(ep.attribute));
    w.raw({ep.label.data(), ep.label.size()});
    w.u64(ep.state);
    w.u64(ep.enc_state);
    w.u64(ep.k3_state);
    w.u32(ep.version);
    w.lp16(mpz_to_bytes(ep.k1));
    w.lp16(mpz_to_bytes(ep.k2));
    w.raw(ep.k3.key.view());
    w.lp16(mpz_to_bytes(ep.r_secret));
    w.lp16(mpz_to_bytes(ep.addr));
    w.u32(static_cast<uint32_t>(ep.membership.size()));
    w.raw(ep.membership.bytes());
    records.push_back({kOwnerEpoch, w.take()});
  }
  for (const auto& ev : history_) {
    ByteWriter w;
    w.u64(ev.ts);
    w.lp16(as_bytes(ev.keyword));
    w.u8(static_cast<uint8_t>(ev.op));
    w.u32(static_cast<uint32_t>(ev.file_ids.size()));
    for (uint32_t id : ev.file_ids) w.u32(id);
    records.push_back({kOwnerHistory, w.take()});
  }
  {
    ByteWriter w;
    w.lp32(as_bytes(rng_.save_state()));
    records.push_back({kOwnerRng, w.take()});
  }
  vault_write_file(file, kVaultOwner, records);
}

Owner Owner::load(const std::filesystem::path& file) {
  Owner owner;
  bool have_meta = false;
  for (const auto& rec : vault_read_file(file, kVaultOwner)) {
    ByteReader r(rec.payload);
    switch (rec.type) {
      case kOwnerMeta: {
        owner.config_.lambda_q = r.u32();
        owner.config_.lambda_p = r.u32();
        owner.config_.gamma = r.u64();
        owner.clock_ = r.u64();
        owner.mutations_ = r.u64();
        owner.mk_ = PrfKey::from_bytes(r.raw(kPrfKeyLen));
        owner.keys_.trapdoor.xi = mpz_from_bytes(r.lp16());
        owner.keys_.params = ch_params_deserialize(r.lp32());
        r.expect_done();
        have_meta = true;
        break;
      }
      case kOwnerClients: {
        size_t n = r.u32();
        owner.config_.clients.clear();
        for (size_t i = 0; i < n; ++i) owner.config_.clients.push_back(r.u32());
        r.expect_done();
        break;
      }
      case kOwnerAttributes: {
        size_t n = r.u32();
        for (size_t i = 0; i < n; ++i) {
          std::string kw = to_string(r.lp16());
          owner.config_.attribute_of[kw] = to_string(r.lp16());
        }
        r.expect_done();
        break;
      }
      case kOwnerDhtStates: {
        size_t n = r.u32();
        for (size_t i = 0; i < n; ++i) {
          std::string att = to_string(r.lp16());
          owner.dht_states_[att] = r.u64();
        }
        r.expect_done();
        break;
      }
      case kOwnerEpoch: {
        std::string kw = to_string(r.lp16());
        KeywordEpoch ep;
        ep.attribute = to_string(r.lp16());
        Bytes label = r.raw(ep.label.size());
        std::copy(label.begin(), label.end(), ep.label.begin());
        ep.state = r.u64();
        ep.enc_state = r.u64();
        ep.k3_state = r.u64();
        ep.version = r.u32();
        ep.k1 = mpz_from_bytes(r.lp16());
        ep.k2 = mpz_from_bytes(r.lp16());
        ep.k3 = AsheKey{PrfKey::from_bytes(r.raw(kPrfKeyLen))};
        ep.r_secret = mpz_from_bytes(r.lp16());
        ep.addr = mpz_from_bytes(r.lp16());
        uint32_t nbits = r.u32();
        ep.membership = BitString::from_bytes(r.raw((nbits + 7) / 8), nbits);
        r.expect_done();
        owner.epochs_.emplace(std::move(kw), std::move(ep));
        break;
      }
      case kOwnerHistory: {
        GroundTruthEvent ev;
        ev.ts = r.u64();
        ev.keyword = to_string(r.lp16());
        ev.op = static_cast<UpdateOp>(r.u8());
        size_t n = r.u32();
        for (size_t i = 0; i < n; ++i) ev.file_ids.push_back(r.u32());
        r.expect_done();
        owner.history_.push_back(std::move(ev));
        break;
      }
      case kOwnerRng:
        owner.rng_.load_state(to_string(r.lp32()));
        break;
      default:
        throw std::runtime_error("unknown owner record type");
    }
  }
  if (!have_meta || owner.config_.clients.empty()) {
    throw std::runtime_error("owner file incomplete");
  }
  owner.eval_ = std::make_shared<ChameleonEvaluator>(owner.keys_.params);
  owner.tree_ = tree_build(owner.mk_, owner.config_.clients);
  return owner;
}

}  // namespace ssevault
