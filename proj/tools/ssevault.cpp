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

// Command-line front end: owner-side administration (setup, authorize,
// update, revoke), client-side search, shard serving over TCP, and the
// benchmark sweep. State lives in a data directory; every run is a fresh
// process, so client credential caches are persisted to model real clients
// that keep stale keys across revocations.
//
// Exit codes: 0 success, 2 protocol rejection (a stale or missing
// credential), 1 anything else.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ssevault/bench.hpp"
#include "ssevault/bignum.hpp"
#include "ssevault/client.hpp"
#include "ssevault/owner.hpp"
#include "ssevault/persist.hpp"
#include "ssevault/registry.hpp"
#include "ssevault/server.hpp"
#include "ssevault/tcp.hpp"

namespace fs = std::filesystem;
using namespace ssevault;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRejected = 2;

struct GlobalOpts {
  std::string dir;
  uint64_t seed = 1;
  size_t gamma = 64;
  unsigned lambda_q = 160;
  unsigned lambda_p = 1024;
  std::string transport = "inproc";
  std::string registry;
};

fs::path owner_file(const fs::path& dir) { return dir / "owner.ssev"; }
fs::path bulletin_file(const fs::path& dir) { return dir / "bulletin.ssev"; }
fs::path keywords_file(const fs::path& dir) { return dir / "keywords.tsv"; }
fs::path client_file(const fs::path& dir, uint32_t id) {
  return dir / ("client_" + std::to_string(id) + ".cred");
}

// The keyword table maps human-readable names to their pseudorandom labels;
// the engine itself only ever sees labels.
void write_keywords(const fs::path& dir, const Owner& owner,
                    const std::vector<std::string>& keywords) {
  std::ofstream out(keywords_file(dir), std::ios::trunc);
  for (const auto& kw : keywords) {
    Label16 l = owner.keyword_label(kw);
    out << kw << '\t' << hex_encode({l.data(), l.size()}) << '\n';
  }
  if (!out) throw std::runtime_error("cannot write " + keywords_file(dir).string());
}

std::map<std::string, Label16> read_keywords(const fs::path& dir) {
  std::ifstream in(keywords_file(dir));
  if (!in) throw std::runtime_error("cannot read " + keywords_file(dir).string());
  std::map<std::string, Label16> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("corrupt keyword table");
    Bytes raw = hex_decode(line.substr(tab + 1));
    if (raw.size() != 16) throw std::runtime_error("corrupt keyword table");
    Label16 l{};
    std::copy(raw.begin(), raw.end(), l.begin());
    out.emplace(line.substr(0, tab), l);
  }
  return out;
}

// Client credential file: the identity record plus every keyword credential
// unlocked so far. Keeping the cache across invocations is what lets a
// revoked client observe Rejected instead of silently re-fetching tokens.
void save_client(const fs::path& dir, const IssuedCredentials& creds,
                 const std::map<Label16, UnlockedKeyword>& cache) {
  std::vector<VaultRecord> records;
  ByteWriter id;
  id.u32(creds.id);
  id.raw(creds.k_id.view());
  records.push_back({1, id.take()});
  for (const auto& [label, u] : cache) {
    ByteWriter w;
    w.lp16(as_bytes(u.attribute));
    w.raw({u.label.data(), u.label.size()});
    w.u32(u.version);
    w.raw(u.k_dht.view());
    w.lp16(mpz_to_bytes(u.k1));
    w.lp16(mpz_to_bytes(u.k2));
    w.raw(u.k3.key.view());
    w.lp16(mpz_to_bytes(u.r_secret));
    records.push_back({2, w.take()});
  }
  vault_write_file(client_file(dir, creds.id), kVaultClient, records);
}

struct ClientState {
  IssuedCredentials creds;
  std::vector<UnlockedKeyword> cache;
};

ClientState load_client(const fs::path& dir, uint32_t id) {
  ClientState st;
  bool have_id = false;
  for (const VaultRecord& rec : vault_read_file(client_file(dir, id), kVaultClient)) {
    ByteReader r(rec.payload);
    if (rec.type == 1) {
      st.creds.id = r.u32();
      st.creds.k_id = PrfKey::from_bytes(r.raw(kPrfKeyLen));
      r.expect_done();
      have_id = true;
    } else if (rec.type == 2) {
      UnlockedKeyword u;
      u.attribute = to_string(r.lp16());
      Bytes l = r.raw(16);
      std::copy(l.begin(), l.end(), u.label.begin());
      u.version = r.u32();
      u.k_dht = PrfKey::from_bytes(r.raw(kPrfKeyLen));
      u.k1 = mpz_from_bytes(r.lp16());
      u.k2 = mpz_from_bytes(r.lp16());
      u.k3 = AsheKey{PrfKey::from_bytes(r.raw(kPrfKeyLen))};
      u.r_secret = mpz_from_bytes(r.lp16());
      r.expect_done();
      st.cache.push_back(std::move(u));
    }
  }
  if (!have_id) throw std::runtime_error("credential file missing identity record");
  return st;
}

// Every shard file in the data directory, loaded and attached to one
// in-process transport.
struct LocalFleet {
  std::vector<std::unique_ptr<StorageServer>> servers;
  InprocTransport transport;

  void load(const fs::path& dir, std::shared_ptr<const ChameleonEvaluator> eval) {
    for (const auto& entry : fs::directory_iterator(dir)) {
      const std::string name = entry.path().filename().string();
      if (name.starts_with("shard_") && name.ends_with(".ssev")) {
        auto server = load_shard(entry.path(), eval);
        transport.attach(server.get());
        servers.push_back(std::move(server));
      }
    }
  }

  void persist(const fs::path& dir) const {
    for (const auto& server : servers) persist_shard(*server, dir);
  }
};

struct Channel {
  LocalFleet fleet;
  std::unique_ptr<TcpTransport> tcp;
  bool is_tcp = false;

  Transport& transport() {
    return is_tcp ? static_cast<Transport&>(*tcp) : fleet.transport;
  }
};

int open_channel(const GlobalOpts& g, const fs::path& dir,
                 std::shared_ptr<const ChameleonEvaluator> eval, Channel& ch) {
  if (g.transport == "tcp") {
    if (g.registry.empty()) {
      std::cerr << "error: --transport tcp requires --registry\n";
      return kExitError;
    }
    ch.is_tcp = true;
    ch.tcp = std::make_unique<TcpTransport>(g.registry);
    return kExitOk;
  }
  ch.fleet.load(dir, std::move(eval));
  if (ch.fleet.servers.empty()) {
    std::cerr << "error: no shard files under " << dir.string() << "\n";
    return kExitError;
  }
  return kExitOk;
}

std::map<std::string, std::vector<uint32_t>> parse_db(const std::string& spec) {
  std::map<std::string, std::vector<uint32_t>> db;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    std::string kw = part.substr(0, eq);
    if (kw.empty()) throw std::invalid_argument("empty keyword in --db");
    auto& ids = db[kw];
    if (eq == std::string::npos) continue;
    std::stringstream is(part.substr(eq + 1));
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (!tok.empty()) ids.push_back(static_cast<uint32_t>(std::stoul(tok)));
    }
  }
  return db;
}

int cmd_setup(const GlobalOpts& g, size_t n_clients, size_t n_attributes,
              const std::vector<std::string>& keyword_names, const std::string& db_spec) {
  if (n_clients < 1) {
    std::cerr << "error: need at least one client\n";
    return kExitError;
  }
  auto db = parse_db(db_spec);
  for (const auto& kw : keyword_names) db.try_emplace(kw);
  if (db.empty()) {
    std::cerr << "error: no keywords (use --keywords or --db)\n";
    return kExitError;
  }

  fs::path dir = data_dir(g.dir);
  fs::create_directories(dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.ends_with(".ssev") || name.ends_with(".cred") || name == "keywords.tsv") {
      fs::remove(entry.path());
    }
  }

  OwnerConfig oc;
  oc.lambda_q = g.lambda_q;
  oc.lambda_p = g.lambda_p;
  oc.gamma = g.gamma;
  for (uint32_t id = 1; id <= n_clients; ++id) oc.clients.push_back(id);
  std::vector<std::string> names;
  size_t j = 0;
  for (const auto& [kw, ids] : db) {
    oc.attribute_of[kw] = "att" + std::to_string(j % std::max<size_t>(1, n_attributes));
    names.push_back(kw);
    ++j;
  }

  DetRng rng(g.seed);
  Owner owner = Owner::init(std::move(oc), rng);
  Bulletin bulletin;
  owner.publish_enrollment(bulletin);
  auto shards = owner.build_edb(db, bulletin);
  std::set<uint32_t> everyone(owner.clients().begin(), owner.clients().end());
  for (const auto& kw : names) owner.authorize(kw, everyone, bulletin);

  for (const ShardInit& shard : shards) {
    StorageServer server(shard.shard_addr, owner.evaluator());
    for (const auto& [addr, r, e] : shard.entries) {
      if (server.store_entry(addr, r, e) != WireStatus::kOk) {
        throw std::runtime_error("duplicate entry address while seeding");
      }
    }
    persist_shard(server, dir);
  }

  owner.save(owner_file(dir));
  bulletin.save(bulletin_file(dir));
  write_keywords(dir, owner, names);
  for (uint32_t id : owner.clients()) save_client(dir, owner.credentials_for(id), {});

  std::cout << "initialized " << dir.string() << ": " << names.size() << " keywords, "
            << shards.size() << " shards, " << owner.clients().size() << " clients\n";
  return kExitOk;
}

int cmd_authorize(const GlobalOpts& g, const std::string& keyword,
                  const std::vector<uint32_t>& ids) {
  fs::path dir = data_dir(g.dir);
  Owner owner = Owner::load(owner_file(dir));
  if (!owner.has_keyword(keyword)) {
    std::cout << "not-found " << keyword << "\n";
    return kExitError;
  }
  Bulletin bulletin = Bulletin::load(bulletin_file(dir));
  owner.authorize(keyword, {ids.begin(), ids.end()}, bulletin);
  owner.save(owner_file(dir));
  bulletin.save(bulletin_file(dir));
  std::cout << "authorized " << ids.size() << " clients for " << keyword << "\n";
  return kExitOk;
}

int cmd_search(const GlobalOpts& g, uint32_t client_id, const std::string& keyword) {
  fs::path dir = data_dir(g.dir);
  Bulletin bulletin = Bulletin::load(bulletin_file(dir));
  if (!bulletin.params()) {
    std::cerr << "error: bulletin carries no public parameters\n";
    return kExitError;
  }
  auto keywords = read_keywords(dir);
  auto it = keywords.find(keyword);
  if (it == keywords.end()) {
    std::cout << "not-found " << keyword << "\n";
    return kExitError;
  }

  auto eval = std::make_shared<const ChameleonEvaluator>(*bulletin.params());
  ClientState st = load_client(dir, client_id);
  Client client(st.creds, eval);
  if (!client.recover_pathkey(bulletin)) {
    std::cout << "not-authorized\n";
    return kExitRejected;
  }
  for (auto& u : st.cache) client.import_unlocked(std::move(u));

  Channel ch;
  if (int rc = open_channel(g, dir, eval, ch); rc != kExitOk) return rc;
  SearchResult res = client.search(ch.transport(), bulletin, it->second);
  if (!ch.is_tcp) ch.fleet.persist(dir);
  save_client(dir, st.creds, client.unlocked());

  switch (res.status) {
    case SearchResult::Status::kFound: {
      std::cout << "found";
      for (uint32_t id : res.file_ids) std::cout << ' ' << id;
      std::cout << "\n";
      return kExitOk;
    }
    case SearchResult::Status::kRejected:
      std::cout << "rejected\n";
      return kExitRejected;
    case SearchResult::Status::kNotAuthorized:
      std::cout << "not-authorized\n";
      return kExitRejected;
    case SearchResult::Status::kNotFound:
      std::cout << "not-found\n";
      return kExitError;
    case SearchResult::Status::kUnresolvable:
      std::cout << "unresolvable\n";
      return kExitError;
  }
  return kExitError;
}

// Owner state is saved only after the shard acknowledged the change, so a
// dead shard cannot desynchronize the two sides.
int cmd_update(const GlobalOpts& g, const std::string& keyword,
               const std::vector<uint32_t>& adds, const std::vector<uint32_t>& dels) {
  if (adds.empty() == dels.empty()) {
    std::cerr << "error: exactly one of --add / --delete\n";
    return kExitError;
  }
  fs::path dir = data_dir(g.dir);
  Owner owner = Owner::load(owner_file(dir));
  if (!owner.has_keyword(keyword)) {
    std::cout << "not-found " << keyword << "\n";
    return kExitError;
  }

  UpdateOp op = adds.empty() ? UpdateOp::kDelete : UpdateOp::kAdd;
  const std::vector<uint32_t>& ids = adds.empty() ? dels : adds;
  UpdateMessage msg = owner.make_update(keyword, op, ids);

  Channel ch;
  if (int rc = open_channel(g, dir, owner.evaluator(), ch); rc != kExitOk) return rc;
  Bytes shard = owner.shard_addr(owner.epoch(keyword).attribute);
  auto st = remote_update(ch.transport(), shard, msg.addr, msg.e_up);
  if (!st) {
    std::cout << "unresolvable\n";
    return kExitError;
  }
  if (*st != WireStatus::kOk) {
    std::cout << (*st == WireStatus::kRejected ? "rejected"
                  : *st == WireStatus::kStateGap
                      ? "state-gap (owner and shard are out of sync)"
                      : "not-found")
              << "\n";
    return *st == WireStatus::kRejected ? kExitRejected : kExitError;
  }
  if (!ch.is_tcp) ch.fleet.persist(dir);
  owner.save(owner_file(dir));
  std::cout << "updated " << keyword << " (" << (op == UpdateOp::kAdd ? "add" : "delete")
            << " " << ids.size() << " files)\n";
  return kExitOk;
}

int cmd_revoke(const GlobalOpts& g, const std::string& keyword,
               const std::vector<uint32_t>& keep) {
  fs::path dir = data_dir(g.dir);
  Owner owner = Owner::load(owner_file(dir));
  if (!owner.has_keyword(keyword)) {
    std::cout << "not-found " << keyword << "\n";
    return kExitError;
  }
  Bulletin bulletin = Bulletin::load(bulletin_file(dir));
  RevokeOutput out = owner.revoke(keyword, {keep.begin(), keep.end()}, bulletin);

  Channel ch;
  if (int rc = open_channel(g, dir, owner.evaluator(), ch); rc != kExitOk) return rc;
  Bytes shard = owner.shard_addr(owner.epoch(keyword).attribute);
  auto st = remote_swap(ch.transport(), shard, out.swap.addr, mpz_to_bytes(out.swap.r_new));
  if (!st) {
    std::cout << "unresolvable\n";
    return kExitError;
  }
  if (*st != WireStatus::kOk) {
    std::cout << (*st == WireStatus::kRejected ? "rejected" : "not-found") << "\n";
    return *st == WireStatus::kRejected ? kExitRejected : kExitError;
  }
  if (!ch.is_tcp) ch.fleet.persist(dir);
  owner.save(owner_file(dir));
  bulletin.save(bulletin_file(dir));
  std::cout << "revoked: " << keep.size() << " clients remain on " << keyword << " ("
            << out.tokens.size() << " tokens republished)\n";
  return kExitOk;
}

int cmd_bench(const GlobalOpts& g, const std::vector<size_t>& keywords,
              const std::vector<size_t>& files, const std::vector<size_t>& clients,
              size_t reps, bool stress, const std::string& csv_path,
              const std::string& gnuplot_path) {
  BenchConfig config;
  config.keywords = keywords;
  config.files = files;
  config.clients = clients;
  config.repetitions = reps;
  config.seed = g.seed;
  config.lambda_q = g.lambda_q;
  config.lambda_p = g.lambda_p;
  config.stress = stress;

  auto rows = run_bench(config);
  std::string csv = bench_csv(rows);
  if (csv_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(csv_path, std::ios::trunc);
    out << csv;
    if (!out) throw std::runtime_error("cannot write " + csv_path);
  }
  if (!gnuplot_path.empty()) {
    std::ofstream out(gnuplot_path, std::ios::trunc);
    out << bench_gnuplot(rows);
    if (!out) throw std::runtime_error("cannot write " + gnuplot_path);
  }
  for (const auto& row : rows) {
    if (row.op == "error") {
      std::cerr << "error: grid point (" << row.keywords << ", " << row.files << ", "
                << row.clients << ") failed: " << row.note << "\n";
      return kExitError;
    }
  }
  return kExitOk;
}

volatile std::sig_atomic_t g_stop = 0;
void handle_signal(int) { g_stop = 1; }

int cmd_serve(const GlobalOpts& g, const std::string& bind, uint16_t port) {
  fs::path dir = data_dir(g.dir);
  Bulletin bulletin = Bulletin::load(bulletin_file(dir));
  if (!bulletin.params()) {
    std::cerr << "error: bulletin carries no public parameters\n";
    return kExitError;
  }
  auto eval = std::make_shared<const ChameleonEvaluator>(*bulletin.params());
  LocalFleet fleet;
  fleet.load(dir, eval);
  if (fleet.servers.empty()) {
    std::cerr << "error: no shard files under " << dir.string() << "\n";
    return kExitError;
  }

  std::optional<TcpRegistryHost> registry;
  std::string registry_endpoint = g.registry;
  if (registry_endpoint.empty()) {
    registry.emplace(bind, port);
    registry_endpoint = registry->endpoint();
    std::cout << "registry " << registry_endpoint << "\n";
  }

  std::vector<std::unique_ptr<TcpShardHost>> hosts;
  for (const auto& server : fleet.servers) {
    auto host = std::make_unique<TcpShardHost>(*server, bind, 0);
    if (!host->register_with(registry_endpoint)) {
      std::cerr << "error: shard registration failed\n";
      for (auto& h : hosts) h->stop();
      if (registry) registry->stop();
      return kExitError;
    }
    std::cout << "shard " << hex_encode(server->address()) << " " << host->endpoint() << "\n";
    hosts.push_back(std::move(host));
  }
  std::cout << "serving " << hosts.size() << " shards; Ctrl-C to stop\n" << std::flush;

  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));

  for (auto& host : hosts) host->stop();
  if (registry) registry->stop();
  fleet.persist(dir);
  std::cout << "state saved\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ssevault: multi-client searchable encryption over sharded storage"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  GlobalOpts g;
  app.add_option("--data-dir", g.dir,
                 "State directory (default $SSE_VAULT_DATA_DIR or ./ssevault-data)");
  app.add_option("--seed", g.seed, "Deterministic RNG seed");
  app.add_option("--gamma", g.gamma, "Bitmap width: size of the file-id universe");
  app.add_option("--lambda-q", g.lambda_q, "Chameleon subgroup order in bits");
  app.add_option("--lambda-p", g.lambda_p, "Chameleon modulus in bits");
  app.add_option("--transport", g.transport, "inproc or tcp")
      ->check(CLI::IsMember({"inproc", "tcp"}));
  app.add_option("--registry", g.registry, "Registry endpoint host:port (tcp mode)");

  int rc = kExitOk;

  auto* setup = app.add_subcommand(
      "setup", "Generate keys, build the encrypted index, authorize every client");
  size_t n_clients = 8;
  size_t n_attributes = 1;
  std::vector<std::string> keyword_names;
  std::string db_spec;
  setup->add_option("--clients", n_clients, "Number of clients (ids 1..N)");
  setup->add_option("--keywords", keyword_names, "Keyword names")->delimiter(',');
  setup->add_option("--attributes", n_attributes, "Number of attribute shards");
  setup->add_option("--db", db_spec, "Initial file sets, e.g. w1=0,3,5;w2=1,2");
  setup->callback([&] { rc = cmd_setup(g, n_clients, n_attributes, keyword_names, db_spec); });

  auto* authorize = app.add_subcommand(
      "authorize", "Replace a keyword's published token set with the given clients");
  std::string auth_kw;
  std::vector<uint32_t> auth_ids;
  authorize->add_option("--keyword", auth_kw, "Keyword")->required();
  authorize->add_option("--clients", auth_ids, "Client ids")->required()->delimiter(',');
  authorize->callback([&] { rc = cmd_authorize(g, auth_kw, auth_ids); });

  auto* search = app.add_subcommand("search", "Run one keyword search as a client");
  uint32_t search_client = 1;
  std::string search_kw;
  search->add_option("--client", search_client, "Client id")->required();
  search->add_option("--keyword", search_kw, "Keyword")->required();
  search->callback([&] { rc = cmd_search(g, search_client, search_kw); });

  auto* update = app.add_subcommand("update", "Add or delete files for a keyword");
  std::string up_kw;
  std::vector<uint32_t> add_ids, del_ids;
  update->add_option("--keyword", up_kw, "Keyword")->required();
  update->add_option("--add", add_ids, "File ids to add")->delimiter(',');
  update->add_option("--delete", del_ids, "File ids to delete")->delimiter(',');
  update->callback([&] { rc = cmd_update(g, up_kw, add_ids, del_ids); });

  auto* revoke = app.add_subcommand(
      "revoke", "Rotate keyword keys so only the kept clients stay authorized");
  std::string rev_kw;
  std::vector<uint32_t> keep_ids;
  revoke->add_option("--keyword", rev_kw, "Keyword")->required();
  revoke->add_option("--keep", keep_ids, "Clients that remain authorized")->delimiter(',');
  revoke->callback([&] { rc = cmd_revoke(g, rev_kw, keep_ids); });

  auto* bench = app.add_subcommand("bench", "Timing sweep over a (keywords, files, clients) grid");
  std::vector<size_t> bench_kw{1000}, bench_files{1000}, bench_clients{100};
  size_t bench_reps = 1000;
  bool bench_stress = false;
  std::string csv_path = "-", gnuplot_path;
  bench->add_option("--keywords", bench_kw, "Keyword grid")->delimiter(',');
  bench->add_option("--files", bench_files, "File grid")->delimiter(',');
  bench->add_option("--clients", bench_clients, "Client grid")->delimiter(',');
  bench->add_option("--reps", bench_reps, "Repetitions per operation");
  bench->add_flag("--stress", bench_stress, "Concurrency smoke test instead of timings");
  bench->add_option("--csv", csv_path, "CSV output path, - for stdout");
  bench->add_option("--gnuplot", gnuplot_path, "Also write gnuplot data blocks here");
  bench->callback([&] {
    rc = cmd_bench(g, bench_kw, bench_files, bench_clients, bench_reps, bench_stress,
                   csv_path, gnuplot_path);
  });

  auto* serve = app.add_subcommand("serve", "Host every local shard over TCP until Ctrl-C");
  std::string bind = "127.0.0.1";
  uint16_t serve_port = 0;
  serve->add_option("--bind", bind, "Bind address");
  serve->add_option("--port", serve_port, "Registry listen port (0 = ephemeral)");
  serve->callback([&] { rc = cmd_serve(g, bind, serve_port); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return rc;
}
