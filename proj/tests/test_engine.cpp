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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <memory>
#include <set>

#include "ssevault/bignum.hpp"
#include "ssevault/client.hpp"
#include "ssevault/owner.hpp"
#include "ssevault/registry.hpp"
#include "ssevault/server.hpp"

using namespace ssevault;
using Status = SearchResult::Status;

namespace {

ChameleonKeyPair test_keys() {
  static const ChameleonKeyPair kp = [] {
    DetRng rng(2026);
    return ch_setup(64, 256, rng);
  }();
  return kp;
}

// A full single-process deployment: owner, bulletin, one shard per
// attribute, and a transport the clients speak through.
struct Deployment {
  Bulletin bulletin;
  std::optional<Owner> owner;
  std::vector<std::unique_ptr<StorageServer>> servers;
  std::unique_ptr<InprocTransport> transport = std::make_unique<InprocTransport>();

  Client make_client(uint32_t id) {
    Client c(owner->credentials_for(id), owner->evaluator());
    REQUIRE(c.recover_pathkey(bulletin));
    return c;
  }

  SearchResult search(uint32_t id, const std::string& keyword) {
    Client c = make_client(id);
    return c.search(*transport, bulletin, owner->keyword_label(keyword));
  }
};

Deployment deploy(OwnerConfig config, const std::map<std::string, std::vector<uint32_t>>& db,
                  uint64_t seed = 7) {
  Deployment d;
  DetRng rng(seed);
  d.owner = Owner::init(std::move(config), rng, test_keys());
  d.owner->publish_enrollment(d.bulletin);
  for (ShardInit& shard : d.owner->build_edb(db, d.bulletin)) {
    auto server = std::make_unique<StorageServer>(shard.shard_addr, d.owner->evaluator());
    for (auto& [addr, r, e] : shard.entries) {
      REQUIRE(server->store_entry(addr, r, e) == WireStatus::kOk);
    }
    d.transport->attach(server.get());
    d.servers.push_back(std::move(server));
  }
  return d;
}

OwnerConfig basic_config() {
  OwnerConfig config;
  config.lambda_q = 64;
  config.lambda_p = 256;
  config.gamma = 8;
  config.clients = {1, 2, 3, 4};
  config.attribute_of = {{"alpha", "att1"}, {"beta", "att1"}, {"gust", "att2"}};
  return config;
}

}  // namespace

TEST_CASE("keyword key derivation is deterministic and well-ranged") {
  PrfKey k_att;
  k_att.k.fill(0x17);
  mpz_class q = test_keys().params.q;

  KeywordKeys a = derive_keyword_keys(k_att, "wind", 1, q);
  KeywordKeys b = derive_keyword_keys(k_att, "wind", 1, q);
  CHECK(a.k1 == b.k1);
  CHECK(a.k2 == b.k2);
  CHECK(a.k3.key == b.k3.key);

  CHECK(a.k1 >= 1);
  CHECK(a.k1 < q);
  CHECK(a.k2 >= 1);
  CHECK(a.k2 < q);
  CHECK(a.k1 != a.k2);

  // State, keyword, and key slot all separate the derivations.
  KeywordKeys st2 = derive_keyword_keys(k_att, "wind", 2, q);
  CHECK(st2.k1 != a.k1);
  CHECK(st2.k2 != a.k2);
  CHECK(st2.k3.key != a.k3.key);
  KeywordKeys other = derive_keyword_keys(k_att, "rain", 1, q);
  CHECK(other.k1 != a.k1);

  CHECK_THROWS_AS(derive_keyword_keys(k_att, "wind", 0, q), std::invalid_argument);
}

TEST_CASE("init validates its configuration") {
  DetRng rng(1);
  OwnerConfig config = basic_config();

  OwnerConfig bad = config;
  bad.clients.clear();
  CHECK_THROWS_AS(Owner::init(bad, rng, test_keys()), std::invalid_argument);

  bad = config;
  bad.attribute_of.clear();
  CHECK_THROWS_AS(Owner::init(bad, rng, test_keys()), std::invalid_argument);

  bad = config;
  bad.gamma = 0;
  CHECK_THROWS_AS(Owner::init(bad, rng, test_keys()), std::invalid_argument);

  bad = config;
  bad.attribute_of[""] = "att1";
  CHECK_THROWS_AS(Owner::init(bad, rng, test_keys()), std::invalid_argument);

  bad = config;
  bad.attribute_of["w"] = "";
  CHECK_THROWS_AS(Owner::init(bad, rng, test_keys()), std::invalid_argument);

  ChameleonKeyPair broken = test_keys();
  broken.trapdoor.xi += 1;
  CHECK_THROWS_AS(Owner::init(config, rng, broken), std::invalid_argument);

  bad = config;
  bad.clients = {1, 1};
  CHECK_THROWS_AS(Owner::init(bad, rng, test_keys()), std::invalid_argument);
}

TEST_CASE("build_edb groups keywords into attribute shards") {
  auto d = deploy(basic_config(), {{"alpha", {0, 3, 5}}, {"gust", {1}}});
  Owner& owner = *d.owner;

  CHECK(d.servers.size() == 2);
  CHECK(d.bulletin.dht().size() == 2);
  CHECK(d.bulletin.dht().at("att1") == owner.shard_addr("att1"));

  // att1 holds alpha and beta, att2 holds gust.
  std::map<Bytes, size_t> entry_counts;
  for (auto& s : d.servers) entry_counts[s->address()] = s->entries().size();
  CHECK(entry_counts.at(owner.shard_addr("att1")) == 2);
  CHECK(entry_counts.at(owner.shard_addr("att2")) == 1);

  CHECK(owner.has_keyword("beta"));
  CHECK_FALSE(owner.has_keyword("delta"));
  CHECK_THROWS_AS(owner.epoch("delta"), std::out_of_range);
  CHECK(owner.epoch("alpha").membership.to_string() == "10010100");
  CHECK(owner.epoch("beta").state == 1);

  // Initial non-empty sets land in the ground-truth history.
  REQUIRE(owner.history().size() == 2);
  CHECK(owner.history()[0].keyword == "alpha");
  CHECK(owner.history()[0].file_ids == std::vector<uint32_t>{0, 3, 5});

  // A second build is a logic error; unmapped keywords are rejected upfront.
  Bulletin scratch;
  CHECK_THROWS_AS(owner.build_edb({}, scratch), std::logic_error);
}

TEST_CASE("unmapped keywords in the initial db are rejected") {
  DetRng rng(3);
  Owner owner = Owner::init(basic_config(), rng, test_keys());
  Bulletin bulletin;
  CHECK_THROWS_AS(owner.build_edb({{"nope", {1}}}, bulletin), std::invalid_argument);
}

TEST_CASE("authorized client searches end to end") {
  auto d = deploy(basic_config(), {{"alpha", {0, 3, 5}}, {"beta", {2}}});
  d.owner->authorize("alpha", {1, 2}, d.bulletin);
  d.owner->authorize("beta", {1}, d.bulletin);

  SearchResult r = d.search(1, "alpha");
  CHECK(r.status == Status::kFound);
  CHECK(r.file_ids == std::vector<uint32_t>{0, 3, 5});

  CHECK(d.search(2, "alpha").status == Status::kFound);
  CHECK(d.search(3, "alpha").status == Status::kNotAuthorized);
  CHECK(d.search(2, "beta").status == Status::kNotAuthorized);

  // A keyword with no matching files still answers, with an empty set.
  d.owner->authorize("gust", {4}, d.bulletin);
  SearchResult empty = d.search(4, "gust");
  CHECK(empty.status == Status::kFound);
  CHECK(empty.file_ids.empty());

  // Unpublished label: nothing on the bulletin to unmask.
  Label16 unknown{};
  Client c = d.make_client(1);
  CHECK(c.search(*d.transport, d.bulletin, unknown).status == Status::kNotAuthorized);
}

TEST_CASE("client helpers agree with the owner-side addressing") {
  auto d = deploy(basic_config(), {{"alpha", {1, 2}}});
  d.owner->authorize("alpha", {1}, d.bulletin);

  Client c = d.make_client(1);
  auto entry = c.unlock_keyword(d.bulletin, d.owner->keyword_label("alpha"));
  REQUIRE(entry.has_value());
  CHECK(entry->attribute == "att1");
  CHECK(entry->version == 1);

  CHECK(c.locate_shard(*entry) == d.owner->shard_addr("att1"));
  Trapdoor trap = c.gen_trapdoor(*entry);
  CHECK(trap.trap1 == d.owner->epoch("alpha").addr);
  CHECK(trap.trap2 == d.owner->epoch("alpha").k2);
  CHECK(c.unlocked().size() == 1);
}

TEST_CASE("delete shows up in the very next search") {
  auto d = deploy(basic_config(), {{"alpha", {0, 3, 5}}});
  Owner& owner = *d.owner;
  owner.authorize("alpha", {1}, d.bulletin);

  CHECK(owner.epoch("alpha").membership.to_string() == "10010100");

  UpdateMessage up = owner.make_update("alpha", UpdateOp::kDelete, {0});
  CHECK(owner.epoch("alpha").membership.to_string() == "00010100");
  auto st = remote_update(*d.transport, owner.shard_addr("att1"), up.addr, up.e_up);
  REQUIRE(st.has_value());
  CHECK(*st == WireStatus::kOk);

  SearchResult r = d.search(1, "alpha");
  CHECK(r.status == Status::kFound);
  CHECK(r.file_ids == std::vector<uint32_t>{3, 5});

  // Server-side fold spans the whole interval.
  const auto& entry = d.servers[0]->entries().at(up.addr);
  CHECK(entry.e.base == 1);
  CHECK(entry.e.cur == 2);
}

TEST_CASE("add shows up in the very next search") {
  OwnerConfig config = basic_config();
  config.gamma = 6;
  auto d = deploy(config, {{"alpha", {0, 2, 4}}});
  Owner& owner = *d.owner;
  owner.authorize("alpha", {2}, d.bulletin);

  CHECK(owner.epoch("alpha").membership.to_string() == "101010");

  UpdateMessage up = owner.make_update("alpha", UpdateOp::kAdd, {3});
  CHECK(owner.epoch("alpha").membership.to_string() == "101110");
  auto st = remote_update(*d.transport, owner.shard_addr("att1"), up.addr, up.e_up);
  REQUIRE(st.has_value());
  CHECK(*st == WireStatus::kOk);

  SearchResult r = d.search(2, "alpha");
  CHECK(r.status == Status::kFound);
  CHECK(r.file_ids == std::vector<uint32_t>{0, 2, 3, 4});

  // Stale update deltas are refused rather than silently misfolded.
  CHECK(d.servers[0]->apply_update(up.addr, up.e_up) == WireStatus::kStateGap);
  CHECK(d.servers[0]->apply_update(Bytes{0x99}, up.e_up) == WireStatus::kNotFound);
}

TEST_CASE("updates keep the address and rotate nothing") {
  auto d = deploy(basic_config(), {{"alpha", {1}}});
  Owner& owner = *d.owner;

  KeywordEpoch before = owner.epoch("alpha");
  owner.make_update("alpha", UpdateOp::kAdd, {2});
  const KeywordEpoch& after = owner.epoch("alpha");

  CHECK(after.addr == before.addr);
  CHECK(after.k1 == before.k1);
  CHECK(after.k2 == before.k2);
  CHECK(after.k3.key == before.k3.key);
  CHECK(after.version == before.version);
  CHECK(after.state == before.state + 1);
  CHECK(after.enc_state == before.enc_state + 1);
}

TEST_CASE("revocation swaps the witness but never the address") {
  auto d = deploy(basic_config(), {{"alpha", {0, 3, 5}}});
  Owner& owner = *d.owner;
  owner.authorize("alpha", {1, 2, 3}, d.bulletin);

  // Clients 1 and 3 cache their credentials by searching once.
  Client c1 = d.make_client(1);
  Client c3 = d.make_client(3);
  Label16 l_w = owner.keyword_label("alpha");
  CHECK(c1.search(*d.transport, d.bulletin, l_w).status == Status::kFound);
  CHECK(c3.search(*d.transport, d.bulletin, l_w).status == Status::kFound);

  KeywordEpoch before = owner.epoch("alpha");
  Bytes addr = mpz_to_bytes(before.addr);
  EdbEntry server_before = d.servers[0]->entries().at(addr);

  RevokeOutput rev = owner.revoke("alpha", {1, 2}, d.bulletin);
  CHECK(rev.swap.addr == addr);
  auto st = remote_swap(*d.transport, owner.shard_addr("att1"), rev.swap.addr,
                        mpz_to_bytes(rev.swap.r_new));
  REQUIRE(st.has_value());
  CHECK(*st == WireStatus::kOk);

  const KeywordEpoch& after = owner.epoch("alpha");
  CHECK(after.addr == before.addr);
  CHECK(after.version == before.version + 1);
  CHECK(after.state == before.state + 1);
  CHECK(after.enc_state == before.enc_state);  // revocation encrypts nothing
  CHECK(after.k1 != before.k1);
  CHECK(after.k2 != before.k2);
  CHECK(after.k3.key == before.k3.key);  // decryption key survives rotation

  // The shard still stores the same addresses; only r changed.
  REQUIRE(d.servers[0]->entries().size() == 2);
  const EdbEntry& server_after = d.servers[0]->entries().at(addr);
  CHECK(server_after.r != server_before.r);
  CHECK(server_after.e == server_before.e);

  // Revoked client holds a stale credential: the server turns it away and
  // the bulletin offers it nothing newer.
  SearchResult r3 = c3.search(*d.transport, d.bulletin, l_w);
  CHECK(r3.status == Status::kRejected);

  // Survivor recovers via the refreshed token and still decrypts history.
  SearchResult r1 = c1.search(*d.transport, d.bulletin, l_w);
  CHECK(r1.status == Status::kFound);
  CHECK(r1.file_ids == std::vector<uint32_t>{0, 3, 5});

  // A client that never cached anything simply finds no usable token.
  CHECK(d.search(3, "alpha").status == Status::kNotAuthorized);
}

TEST_CASE("updates after a revocation still fold cleanly") {
  auto d = deploy(basic_config(), {{"alpha", {0, 3}}});
  Owner& owner = *d.owner;
  owner.authorize("alpha", {1, 2}, d.bulletin);

  RevokeOutput rev = owner.revoke("alpha", {1}, d.bulletin);
  REQUIRE(remote_swap(*d.transport, owner.shard_addr("att1"), rev.swap.addr,
                      mpz_to_bytes(rev.swap.r_new)) == WireStatus::kOk);

  // state jumped to 2 while enc_state stayed at 1; the next delta must chain
  // onto the stored ciphertext without a gap.
  UpdateMessage up = owner.make_update("alpha", UpdateOp::kAdd, {5});
  CHECK(up.e_up.base == 2);
  auto st = remote_update(*d.transport, owner.shard_addr("att1"), up.addr, up.e_up);
  REQUIRE(st.has_value());
  CHECK(*st == WireStatus::kOk);

  SearchResult r = d.search(1, "alpha");
  CHECK(r.status == Status::kFound);
  CHECK(r.file_ids == std::vector<uint32_t>{0, 3, 5});

  // And a second revocation after the update still leaves the chain intact.
  RevokeOutput rev2 = owner.revoke("alpha", {1}, d.bulletin);
  REQUIRE(remote_swap(*d.transport, owner.shard_addr("att1"), rev2.swap.addr,
                      mpz_to_bytes(rev2.swap.r_new)) == WireStatus::kOk);
  owner.make_update("alpha", UpdateOp::kDelete, {0});
  UpdateMessage up2 = owner.make_update("alpha", UpdateOp::kAdd, {1});
  CHECK(remote_update(*d.transport, owner.shard_addr("att1"),
                      owner.make_update("alpha", UpdateOp::kDelete, {3}).addr, up2.e_up) ==
        WireStatus::kStateGap);
}

TEST_CASE("token unmasking tracks membership exactly") {
  OwnerConfig config = basic_config();
  config.clients = {1, 2, 3, 4, 5, 6};
  config.attribute_of = {{"alpha", "att1"}};
  auto d = deploy(config, {{"alpha", {0}}});
  Owner& owner = *d.owner;
  Label16 l_w = owner.keyword_label("alpha");

  for (uint32_t mask = 1; mask < 64; ++mask) {
    std::set<uint32_t> members;
    for (uint32_t c = 1; c <= 6; ++c) {
      if (mask & (1u << (c - 1))) members.insert(c);
    }
    owner.authorize("alpha", members, d.bulletin);
    for (uint32_t c = 1; c <= 6; ++c) {
      Client client = d.make_client(c);
      auto entry = client.unlock_keyword(d.bulletin, l_w);
      CHECK(entry.has_value() == members.contains(c));
      if (entry) {
        CHECK(client.search(*d.transport, d.bulletin, l_w).status == Status::kFound);
      }
    }
  }
}

TEST_CASE("authorize validates inputs") {
  auto d = deploy(basic_config(), {{"alpha", {0}}});
  CHECK_THROWS_AS(d.owner->authorize("alpha", {}, d.bulletin), std::invalid_argument);
  CHECK_THROWS_AS(d.owner->authorize("alpha", {99}, d.bulletin), std::out_of_range);
  CHECK_THROWS_AS(d.owner->authorize("nope", {1}, d.bulletin), std::out_of_range);
  CHECK_THROWS_AS(d.owner->revoke("alpha", {99}, d.bulletin), std::out_of_range);
  CHECK_THROWS_AS(d.owner->credentials_for(99), std::out_of_range);
}

TEST_CASE("revoking everyone leaves the keyword unreadable") {
  auto d = deploy(basic_config(), {{"alpha", {0, 1}}});
  Owner& owner = *d.owner;
  owner.authorize("alpha", {1, 2}, d.bulletin);
  Client c1 = d.make_client(1);
  Label16 l_w = owner.keyword_label("alpha");
  CHECK(c1.search(*d.transport, d.bulletin, l_w).status == Status::kFound);

  RevokeOutput rev = owner.revoke("alpha", {}, d.bulletin);
  CHECK(rev.tokens.empty());
  REQUIRE(remote_swap(*d.transport, owner.shard_addr("att1"), rev.swap.addr,
                      mpz_to_bytes(rev.swap.r_new)) == WireStatus::kOk);

  CHECK(c1.search(*d.transport, d.bulletin, l_w).status == Status::kRejected);
  CHECK(d.search(2, "alpha").status == Status::kNotAuthorized);
}

TEST_CASE("mutation counter tracks every state change") {
  auto d = deploy(basic_config(), {{"alpha", {0}}});
  Owner& owner = *d.owner;
  uint64_t m0 = owner.mutations();
  owner.authorize("alpha", {1}, d.bulletin);
  CHECK(owner.mutations() == m0 + 1);
  owner.make_update("alpha", UpdateOp::kAdd, {1});
  CHECK(owner.mutations() == m0 + 2);
  owner.revoke("alpha", {1}, d.bulletin);
  CHECK(owner.mutations() == m0 + 3);
}

TEST_CASE("server rejects a forged or mismatched trapdoor") {
  auto d = deploy(basic_config(), {{"alpha", {0}}});
  Owner& owner = *d.owner;
  const KeywordEpoch& ep = owner.epoch("alpha");

  // Right address, wrong K2.
  SearchReply r = d.servers[0]->handle_search(ep.addr, ep.k2 + 1);
  CHECK(r.status == WireStatus::kRejected);
  CHECK_FALSE(r.result.has_value());

  // Unknown address.
  SearchReply miss = d.servers[0]->handle_search(ep.addr + 1, ep.k2);
  CHECK(miss.status == WireStatus::kNotFound);

  // Duplicate store is refused.
  Bytes addr = mpz_to_bytes(ep.addr);
  const EdbEntry& entry = d.servers[0]->entries().at(addr);
  CHECK(d.servers[0]->store_entry(addr, entry.r, entry.e) == WireStatus::kDuplicate);

  // Witness swaps on unknown addresses are reported, not applied.
  CHECK(d.servers[0]->swap_witness(Bytes{0x01}, 5) == WireStatus::kNotFound);

  // remove_entry drops the slot for local maintenance.
  CHECK(d.servers[0]->remove_entry(addr) == WireStatus::kOk);
  CHECK(d.servers[0]->remove_entry(addr) == WireStatus::kNotFound);
}

TEST_CASE("blob storage serves fetches in request order") {
  auto d = deploy(basic_config(), {{"alpha", {0}}});
  StorageServer& s = *d.servers[0];
  CHECK(s.store_blob(4, to_bytes("file four")) == WireStatus::kOk);
  CHECK(s.store_blob(9, to_bytes("file nine")) == WireStatus::kOk);

  auto blobs = s.fetch_blobs({9, 5, 4});
  REQUIRE(blobs.size() == 3);
  CHECK(blobs[0].first == 9);
  CHECK(blobs[0].second == to_bytes("file nine"));
  CHECK(blobs[1].first == 5);
  CHECK_FALSE(blobs[1].second.has_value());
  CHECK(blobs[2].first == 4);

  auto resp = remote_fetch(*d.transport, s.address(), {4});
  REQUIRE(resp.has_value());
  CHECK(resp->status == WireStatus::kOk);
  REQUIRE(resp->blobs.size() == 1);
  CHECK(resp->blobs[0].second == to_bytes("file four"));
}
