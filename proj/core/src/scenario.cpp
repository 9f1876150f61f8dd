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

#include "ssevault/scenario.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ssevault/bignum.hpp"
#include "ssevault/persist.hpp"

namespace ssevault {

namespace {

std::string status_name(SearchResult::Status s) {
  switch (s) {
    case SearchResult::Status::kFound:
      return "found";
    case SearchResult::Status::kRejected:
      return "rejected";
    case SearchResult::Status::kNotAuthorized:
      return "not-authorized";
    case SearchResult::Status::kNotFound:
      return "not-found";
    case SearchResult::Status::kUnresolvable:
      return "unresolvable";
  }
  return "?";
}

std::string ids_to_string(const std::vector<uint32_t>& ids) {
  std::ostringstream os;
  for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  return os.str();
}

std::vector<uint32_t> sample_distinct(DetRng& rng, std::vector<uint32_t> pool, size_t count) {
  std::vector<uint32_t> out;
  count = std::min(count, pool.size());
  for (size_t i = 0; i < count; ++i) {
    size_t j = static_cast<size_t>(rng.u64_below(pool.size()));
    out.push_back(pool[j]);
    pool[j] = pool.back();
    pool.pop_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<uint32_t> random_subset(DetRng& rng, const std::vector<uint32_t>& universe) {
  std::set<uint32_t> out;
  for (uint32_t v : universe) {
    if (rng.u64_below(2) == 0) out.insert(v);
  }
  return out;
}

}  // namespace

ScenarioHarness::ScenarioHarness(ScenarioConfig config, std::optional<ChameleonKeyPair> keys)
    : config_(config) {
  if (config_.n_clients < 1 || config_.n_clients > 8) {
    throw std::invalid_argument("n_clients must be in [1, 8]");
  }
  if (config_.n_keywords < 1 || config_.n_keywords > 16) {
    throw std::invalid_argument("n_keywords must be in [1, 16]");
  }
  if (config_.n_attributes < 1 || config_.n_attributes > config_.n_keywords) {
    throw std::invalid_argument("n_attributes must be in [1, n_keywords]");
  }
  if (config_.gamma < 1 || config_.gamma > 64) {
    throw std::invalid_argument("gamma must be in [1, 64]");
  }
  if (config_.n_ops > 200) throw std::invalid_argument("n_ops must be at most 200");
  setup(std::move(keys));
}

ScenarioHarness::~ScenarioHarness() = default;

void ScenarioHarness::setup(std::optional<ChameleonKeyPair> keys) {
  DetRng rng(config_.seed);

  for (size_t i = 0; i < config_.n_clients; ++i) {
    client_ids_.push_back(static_cast<uint32_t>(i + 1));
  }
  for (size_t i = 0; i < config_.n_keywords; ++i) {
    keywords_.push_back("kw" + std::to_string(i));
  }

  OwnerConfig oc;
  oc.lambda_q = config_.lambda_q;
  oc.lambda_p = config_.lambda_p;
  oc.gamma = config_.gamma;
  oc.clients = client_ids_;
  for (size_t i = 0; i < keywords_.size(); ++i) {
    oc.attribute_of[keywords_[i]] = "att" + std::to_string(i % config_.n_attributes);
  }
  owner_.emplace(Owner::init(std::move(oc), rng, std::move(keys)));
  owner_->publish_enrollment(bulletin_);

  std::map<std::string, std::vector<uint32_t>> db;
  for (const auto& kw : keywords_) {
    std::vector<uint32_t> ids;
    for (size_t f = 0; f < config_.gamma; ++f) {
      if (rng.u64_below(4) == 0) ids.push_back(static_cast<uint32_t>(f));
    }
    truth_[kw].files = std::set<uint32_t>(ids.begin(), ids.end());
    db.emplace(kw, std::move(ids));
  }

  std::vector<ShardInit> shards = owner_->build_edb(db, bulletin_);
  for (const auto& shard : shards) {
    shard_addrs_.push_back(shard.shard_addr);
    auto server = std::make_unique<StorageServer>(shard.shard_addr, owner_->evaluator());
    if (config_.leaky) install_tap(*server);
    servers_.push_back(std::move(server));
  }
  start_transport();
  for (const auto& shard : shards) {
    for (const auto& [addr, r, e] : shard.entries) {
      auto st = remote_store_entry(*transport_, shard.shard_addr, addr, mpz_to_bytes(r), e);
      if (!st || *st != WireStatus::kOk) throw std::runtime_error("failed to seed shard");
    }
  }

  for (const auto& kw : keywords_) {
    std::set<uint32_t> members = random_subset(rng, client_ids_);
    if (members.empty()) {
      members.insert(client_ids_[rng.u64_below(client_ids_.size())]);
    }
    owner_->authorize(kw, members, bulletin_);
    truth_[kw].members = std::move(members);
    truth_[kw].version = owner_->epoch(kw).version;
  }

  build_clients();
  generate_script(rng);
}

void ScenarioHarness::build_clients() {
  clients_.clear();
  for (uint32_t id : client_ids_) {
    Client client(owner_->credentials_for(id), owner_->evaluator());
    if (!client.recover_pathkey(bulletin_)) {
      throw std::runtime_error("path key recovery failed for client " + std::to_string(id));
    }
    clients_.emplace(id, std::move(client));
  }
}

void ScenarioHarness::install_tap(StorageServer& server) {
  server.set_transcript_tap([this](TranscriptRecord& rec) {
    if (rec.kind == TranscriptKind::kUpdate) {
      rec.extras.emplace_back("op", last_update_op_);
      rec.extras.emplace_back("ind", last_update_ids_);
    }
  });
}

void ScenarioHarness::start_transport() {
  transport_.reset();
  shard_hosts_.clear();
  registry_host_.reset();
  if (config_.transport == TransportKind::kInproc) {
    auto t = std::make_unique<InprocTransport>();
    for (const auto& server : servers_) {
      if (!t->attach(server.get())) throw std::runtime_error("duplicate shard address");
    }
    transport_ = std::move(t);
  } else {
    registry_host_ = std::make_unique<TcpRegistryHost>();
    for (const auto& server : servers_) {
      auto host = std::make_unique<TcpShardHost>(*server);
      if (!host->register_with(registry_host_->endpoint())) {
        throw std::runtime_error("shard registration failed");
      }
      shard_hosts_.push_back(std::move(host));
    }
    transport_ = std::make_unique<TcpTransport>(registry_host_->endpoint());
  }
}

void ScenarioHarness::generate_script(DetRng& rng) {
  std::map<std::string, std::set<uint32_t>> files, members;
  for (const auto& [kw, truth] : truth_) {
    files[kw] = truth.files;
    members[kw] = truth.members;
  }

  script_.reserve(config_.n_ops);
  for (size_t i = 0; i < config_.n_ops; ++i) {
    ScriptOp op;
    op.keyword = keywords_[rng.u64_below(keywords_.size())];
    uint64_t roll = rng.u64_below(10);
    if (roll < 5) {
      op.kind = ScriptOp::Kind::kSearch;
      op.client = client_ids_[rng.u64_below(client_ids_.size())];
    } else if (roll < 8) {
      op.kind = ScriptOp::Kind::kUpdate;
      std::set<uint32_t>& fs = files[op.keyword];
      std::vector<uint32_t> present(fs.begin(), fs.end());
      std::vector<uint32_t> absent;
      for (size_t f = 0; f < config_.gamma; ++f) {
        if (!fs.contains(static_cast<uint32_t>(f))) absent.push_back(static_cast<uint32_t>(f));
      }
      bool add = absent.empty() ? false : (present.empty() || rng.u64_below(2) == 0);
      op.op = add ? UpdateOp::kAdd : UpdateOp::kDelete;
      op.ids = sample_distinct(rng, add ? absent : present, 1 + rng.u64_below(3));
      for (uint32_t id : op.ids) {
        if (add) {
          fs.insert(id);
        } else {
          fs.erase(id);
        }
      }
    } else if (roll < 9) {
      op.kind = ScriptOp::Kind::kRevoke;
      std::vector<uint32_t> current(members[op.keyword].begin(), members[op.keyword].end());
      op.members = random_subset(rng, current);
      members[op.keyword] = op.members;
    } else {
      op.kind = ScriptOp::Kind::kAuthorize;
      op.members = random_subset(rng, client_ids_);
      if (op.members.empty()) {
        op.members.insert(client_ids_[rng.u64_below(client_ids_.size())]);
      }
      members[op.keyword] = op.members;
    }
    script_.push_back(std::move(op));
  }
}

bool ScenarioHarness::run() { return run_ops(script_.size() - next_op_); }

bool ScenarioHarness::run_ops(size_t count) {
  if (!error_.empty()) return false;
  size_t end = std::min(script_.size(), next_op_ + count);
  while (next_op_ < end) {
    if (!exec_op(script_[next_op_])) {
      ++next_op_;
      return false;
    }
    ++next_op_;
  }
  return true;
}

bool ScenarioHarness::fail(std::string message) {
  error_ = "op " + std::to_string(next_op_) + ": " + std::move(message);
  return false;
}

SearchResult::Status ScenarioHarness::expected_status(uint32_t client,
                                                      const std::string& keyword) const {
  const OracleKeyword& truth = truth_.at(keyword);
  auto it = cache_version_.find({client, keyword});
  if (it != cache_version_.end() && it->second == truth.version) {
    return SearchResult::Status::kFound;
  }
  if (truth.members.contains(client)) return SearchResult::Status::kFound;
  if (it != cache_version_.end()) return SearchResult::Status::kRejected;
  return SearchResult::Status::kNotAuthorized;
}

bool ScenarioHarness::verify_search(uint32_t client, const std::string& keyword,
                                    const std::string& why) {
  SearchResult::Status want = expected_status(client, keyword);
  const OracleKeyword& truth = truth_.at(keyword);
  std::vector<uint32_t> want_ids(truth.files.begin(), truth.files.end());

  ++stats_.searches;
  SearchResult got =
      clients_.at(client).search(*transport_, bulletin_, owner_->keyword_label(keyword));

  auto describe = [&](SearchResult::Status s, const std::vector<uint32_t>& ids) {
    std::string d = status_name(s);
    if (s == SearchResult::Status::kFound) d += "{" + ids_to_string(ids) + "}";
    return d;
  };
  if (got.status != want ||
      (want == SearchResult::Status::kFound && got.file_ids != want_ids)) {
    return fail(why + ": client " + std::to_string(client) + " keyword " + keyword +
                ": expected " + describe(want, want_ids) + ", got " +
                describe(got.status, got.file_ids));
  }

  switch (want) {
    case SearchResult::Status::kFound:
      ++stats_.found;
      cache_version_[{client, keyword}] = truth.version;
      last_result_ = got.file_ids;
      break;
    case SearchResult::Status::kRejected:
      ++stats_.rejected;
      break;
    case SearchResult::Status::kNotAuthorized:
      ++stats_.not_authorized;
      break;
    default:
      break;
  }
  return true;
}

bool ScenarioHarness::exec_op(const ScriptOp& op) {
  auto first_capable = [this](const std::string& kw) -> std::optional<uint32_t> {
    for (uint32_t id : client_ids_) {
      if (expected_status(id, kw) == SearchResult::Status::kFound) return id;
    }
    return std::nullopt;
  };

  switch (op.kind) {
    case ScriptOp::Kind::kSearch:
      return verify_search(op.client, op.keyword, "search");

    case ScriptOp::Kind::kUpdate: {
      ++stats_.updates;
      UpdateMessage msg = owner_->make_update(op.keyword, op.op, op.ids);
      last_update_op_ = op.op == UpdateOp::kAdd ? "add" : "delete";
      last_update_ids_ = ids_to_string(op.ids);
      Bytes shard = owner_->shard_addr(owner_->epoch(op.keyword).attribute);
      auto st = remote_update(*transport_, shard, msg.addr, msg.e_up);
      if (!st || *st != WireStatus::kOk) {
        return fail("update for " + op.keyword + " not accepted");
      }
      OracleKeyword& truth = truth_[op.keyword];
      for (uint32_t id : op.ids) {
        if (op.op == UpdateOp::kAdd) {
          truth.files.insert(id);
        } else {
          truth.files.erase(id);
        }
      }
      if (auto c = first_capable(op.keyword)) {
        if (!verify_search(*c, op.keyword, "post-update check")) return false;
        if (op.op == UpdateOp::kDelete) {
          ++stats_.deletion_checks;
          for (uint32_t id : op.ids) {
            if (std::binary_search(last_result_.begin(), last_result_.end(), id)) {
              return fail("deleted file " + std::to_string(id) + " still returned for " +
                          op.keyword);
            }
          }
        }
      }
      if (op.op == UpdateOp::kDelete) ++stats_.deletions;
      return true;
    }

    case ScriptOp::Kind::kRevoke: {
      ++stats_.revocations;
      OracleKeyword& truth = truth_[op.keyword];
      std::set<uint32_t> before = truth.members;
      RevokeOutput out = owner_->revoke(op.keyword, op.members, bulletin_);
      Bytes shard = owner_->shard_addr(owner_->epoch(op.keyword).attribute);
      auto st = remote_swap(*transport_, shard, out.swap.addr, mpz_to_bytes(out.swap.r_new));
      if (!st || *st != WireStatus::kOk) {
        return fail("witness swap for " + op.keyword + " not accepted");
      }
      truth.members = op.members;
      truth.version = owner_->epoch(op.keyword).version;
      for (uint32_t id : client_ids_) {
        if (before.contains(id) && !op.members.contains(id)) {
          if (!verify_search(id, op.keyword, "post-revoke lockout check")) return false;
          break;
        }
      }
      for (uint32_t id : client_ids_) {
        if (op.members.contains(id)) {
          if (!verify_search(id, op.keyword, "post-revoke survivor check")) return false;
          break;
        }
      }
      return true;
    }

    case ScriptOp::Kind::kAuthorize: {
      ++stats_.authorizations;
      OracleKeyword& truth = truth_[op.keyword];
      std::set<uint32_t> before = truth.members;
      owner_->authorize(op.keyword, op.members, bulletin_);
      truth.members = op.members;
      for (uint32_t id : client_ids_) {
        if (op.members.contains(id) && !before.contains(id)) {
          if (!verify_search(id, op.keyword, "post-authorize grant check")) return false;
          break;
        }
      }
      return true;
    }
  }
  return fail("unknown scripted op");
}

std::vector<ShardTranscript> ScenarioHarness::transcripts() const {
  std::vector<ShardTranscript> out;
  out.reserve(servers_.size());
  for (const auto& server : servers_) {
    out.push_back({server->address(), server->transcript()});
  }
  return out;
}

LeakageReport ScenarioHarness::audit() const {
  return audit_leakage(transcripts(), owner_->history());
}

void ScenarioHarness::persist(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  owner_->save(dir / "owner.ssev");
  bulletin_.save(dir / "bulletin.ssev");
  for (const auto& server : servers_) persist_shard(*server, dir);
}

void ScenarioHarness::reload(const std::filesystem::path& dir) {
  transport_.reset();
  shard_hosts_.clear();
  registry_host_.reset();
  clients_.clear();
  servers_.clear();

  owner_ = Owner::load(dir / "owner.ssev");
  bulletin_ = Bulletin::load(dir / "bulletin.ssev");
  for (const Bytes& addr : shard_addrs_) {
    auto server = load_shard(shard_file_name(dir, addr), owner_->evaluator());
    if (config_.leaky) install_tap(*server);
    servers_.push_back(std::move(server));
  }
  start_transport();
  build_clients();
  cache_version_.clear();
}

ScenarioOutcome run_scenario(const ScenarioConfig& config, std::optional<ChameleonKeyPair> keys) {
  ScenarioOutcome out;
  try {
    ScenarioHarness harness(config, std::move(keys));
    out.ok = harness.run();
    out.error = harness.error();
    out.stats = harness.stats();
    out.audit_pass = harness.audit().pass;
  } catch (const std::exception& e) {
    out.ok = false;
    out.error = e.what();
  }
  return out;
}

}  // namespace ssevault
