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

#include "ssevault/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ssevault/bignum.hpp"
#include "ssevault/client.hpp"
#include "ssevault/owner.hpp"
#include "ssevault/registry.hpp"
#include "ssevault/server.hpp"

namespace ssevault {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0, Clock::time_point t1) {
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double p95_of(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  size_t idx = static_cast<size_t>(std::ceil(0.95 * static_cast<double>(xs.size())));
  if (idx > 0) --idx;
  return xs[idx];
}

size_t type_count(size_t d) {
  return std::max<size_t>(1, std::bit_width(d - 1));
}

// A shard plus one warmed-up client: the per-operation measurement rig.
struct BenchPoint {
  Bulletin bulletin;
  std::optional<Owner> owner;
  std::unique_ptr<StorageServer> server;
  std::unique_ptr<InprocTransport> transport = std::make_unique<InprocTransport>();
  std::vector<std::string> keyword_names;
  std::vector<Label16> labels;
  std::vector<uint32_t> client_ids;
  double edbgen_ms = 0.0;
};

BenchPoint build_point(size_t w, size_t d, size_t u, const BenchConfig& config,
                       const ChameleonKeyPair& keys, DetRng& rng) {
  BenchPoint point;
  for (size_t i = 0; i < u; ++i) point.client_ids.push_back(static_cast<uint32_t>(i + 1));

  auto db = synth_db(w, d);
  OwnerConfig oc;
  oc.lambda_q = config.lambda_q;
  oc.lambda_p = config.lambda_p;
  oc.gamma = d;
  oc.clients = point.client_ids;
  for (const auto& [kw, ids] : db) oc.attribute_of[kw] = "att0";

  auto t0 = Clock::now();
  point.owner.emplace(Owner::init(std::move(oc), rng, keys));
  point.owner->publish_enrollment(point.bulletin);
  std::vector<ShardInit> shards = point.owner->build_edb(db, point.bulletin);
  point.edbgen_ms = elapsed_ms(t0, Clock::now());

  point.server = std::make_unique<StorageServer>(shards.at(0).shard_addr,
                                                 point.owner->evaluator());
  for (const auto& [addr, r, e] : shards.at(0).entries) {
    if (point.server->store_entry(addr, r, e) != WireStatus::kOk) {
      throw std::runtime_error("duplicate index address while seeding");
    }
  }
  if (!point.transport->attach(point.server.get())) {
    throw std::runtime_error("shard attach failed");
  }

  std::set<uint32_t> everyone(point.client_ids.begin(), point.client_ids.end());
  for (const auto& [kw, ids] : db) {
    point.owner->authorize(kw, everyone, point.bulletin);
    point.keyword_names.push_back(kw);
    point.labels.push_back(point.owner->keyword_label(kw));
  }
  return point;
}

Client warmed_client(BenchPoint& point, uint32_t id) {
  Client client(point.owner->credentials_for(id), point.owner->evaluator());
  if (!client.recover_pathkey(point.bulletin)) {
    throw std::runtime_error("path key recovery failed");
  }
  for (const Label16& label : point.labels) {
    if (!client.unlock_keyword(point.bulletin, label)) {
      throw std::runtime_error("keyword unlock failed during warm-up");
    }
  }
  return client;
}

std::vector<BenchRow> measure_point(size_t w, size_t d, size_t u, const BenchConfig& config,
                                    BenchPoint& point, DetRng& rng) {
  std::vector<BenchRow> rows;
  rows.push_back({"edbgen", w, d, u, point.edbgen_ms, point.edbgen_ms, ""});

  Client client = warmed_client(point, 1);
  size_t reps = std::max<size_t>(1, config.repetitions);

  std::vector<double> times;
  times.reserve(reps);
  for (size_t i = 0; i < reps; ++i) {
    const Label16& label = point.labels[i % point.labels.size()];
    auto t0 = Clock::now();
    SearchResult res = client.search(*point.transport, point.bulletin, label);
    times.push_back(elapsed_ms(t0, Clock::now()));
    if (res.status != SearchResult::Status::kFound) {
      throw std::runtime_error("benchmark search did not succeed");
    }
  }
  rows.push_back({"search", w, d, u, mean_of(times), p95_of(times), ""});

  times.clear();
  for (size_t i = 0; i < reps; ++i) {
    const std::string& kw = point.keyword_names[i % point.keyword_names.size()];
    uint32_t fid = static_cast<uint32_t>(rng.u64_below(d));
    UpdateOp op =
        point.owner->epoch(kw).membership.get(fid) ? UpdateOp::kDelete : UpdateOp::kAdd;
    Bytes shard = point.server->address();
    auto t0 = Clock::now();
    UpdateMessage msg = point.owner->make_update(kw, op, {fid});
    auto st = remote_update(*point.transport, shard, msg.addr, msg.e_up);
    times.push_back(elapsed_ms(t0, Clock::now()));
    if (!st || *st != WireStatus::kOk) throw std::runtime_error("benchmark update rejected");
  }
  rows.push_back({"update", w, d, u, mean_of(times), p95_of(times), ""});

  std::set<uint32_t> everyone(point.client_ids.begin(), point.client_ids.end());
  times.clear();
  for (size_t i = 0; i < reps; ++i) {
    const std::string& kw = point.keyword_names[i % point.keyword_names.size()];
    std::set<uint32_t> remaining = everyone;
    remaining.erase(point.client_ids[i % point.client_ids.size()]);
    if (remaining.empty()) remaining = everyone;
    Bytes shard = point.server->address();
    auto t0 = Clock::now();
    RevokeOutput out = point.owner->revoke(kw, remaining, point.bulletin);
    auto st = remote_swap(*point.transport, shard, out.swap.addr, mpz_to_bytes(out.swap.r_new));
    times.push_back(elapsed_ms(t0, Clock::now()));
    if (!st || *st != WireStatus::kOk) throw std::runtime_error("benchmark swap rejected");
  }
  rows.push_back({"revoke", w, d, u, mean_of(times), p95_of(times), ""});
  return rows;
}

BenchRow stress_point(size_t w, size_t d, size_t u, const BenchConfig& config,
                      BenchPoint& point) {
  auto db = synth_db(w, d);
  std::map<Label16, std::vector<uint32_t>> expected;
  for (size_t i = 0; i < point.keyword_names.size(); ++i) {
    expected[point.labels[i]] = db.at(point.keyword_names[i]);
  }

  size_t n_threads = std::min<size_t>(4, u);
  size_t per_thread = (std::max<size_t>(1, config.repetitions) + n_threads - 1) / n_threads;
  std::atomic<size_t> failures{0};
  std::vector<std::thread> threads;
  for (size_t t = 0; t < n_threads; ++t) {
    threads.emplace_back([&, t] {
      Client client = warmed_client(point, static_cast<uint32_t>(t + 1));
      for (size_t j = 0; j < per_thread; ++j) {
        size_t idx = (t + j * n_threads) % point.labels.size();
        SearchResult res = client.search(*point.transport, point.bulletin, point.labels[idx]);
        if (res.status != SearchResult::Status::kFound ||
            res.file_ids != expected.at(point.labels[idx])) {
          failures.fetch_add(1);
        }
      }
    });
  }
  for (auto& th : threads) th.join();

  BenchRow row{"stress-search", w, d, u, 0.0, 0.0, ""};
  size_t total = n_threads * per_thread;
  if (failures.load() == 0) {
    row.note = "ok: " + std::to_string(total) + " concurrent searches, " +
               std::to_string(n_threads) + " threads";
  } else {
    row.note = std::to_string(failures.load()) + " of " + std::to_string(total) +
               " concurrent searches failed";
  }
  return row;
}

}  // namespace

std::map<std::string, std::vector<uint32_t>> synth_db(size_t w, size_t d) {
  if (w < 1 || d < 1) throw std::invalid_argument("grid values must be at least 1");
  size_t types = type_count(d);
  std::vector<std::vector<uint32_t>> per_type(types);
  for (size_t i = 1; i <= types; ++i) {
    size_t top = d >> i;
    for (size_t f = 0; f <= top; ++f) per_type[i - 1].push_back(static_cast<uint32_t>(f));
  }
  std::map<std::string, std::vector<uint32_t>> db;
  for (size_t j = 0; j < w; ++j) {
    db.emplace("w" + std::to_string(j), per_type[j % types]);
  }
  return db;
}

size_t synth_pair_count(size_t w, size_t d) {
  size_t types = type_count(d);
  size_t total = 0;
  for (size_t j = 0; j < w; ++j) total += (d >> (j % types + 1)) + 1;
  return total;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  for (size_t v : config.keywords) {
    if (v < 1) throw std::invalid_argument("keyword grid values must be at least 1");
  }
  for (size_t v : config.files) {
    if (v < 1) throw std::invalid_argument("file grid values must be at least 1");
  }
  for (size_t v : config.clients) {
    if (v < 1) throw std::invalid_argument("client grid values must be at least 1");
  }

  DetRng key_rng(config.seed);
  ChameleonKeyPair keys = ch_setup(config.lambda_q, config.lambda_p, key_rng);

  std::vector<BenchRow> rows;
  for (size_t w : config.keywords) {
    for (size_t d : config.files) {
      for (size_t u : config.clients) {
        DetRng rng(config.seed ^ (w * 1000003ull + d * 7919ull + u * 31ull));
        try {
          BenchPoint point = build_point(w, d, u, config, keys, rng);
          if (config.stress) {
            rows.push_back(stress_point(w, d, u, config, point));
          } else {
            auto point_rows = measure_point(w, d, u, config, point, rng);
            rows.insert(rows.end(), point_rows.begin(), point_rows.end());
          }
        } catch (const std::exception& e) {
          rows.push_back({"error", w, d, u, 0.0, 0.0, e.what()});
        }
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "op,keywords,files,clients,mean_ms,p95_ms,note\n";
  char buf[64];
  for (const auto& row : rows) {
    os << row.op << ',' << row.keywords << ',' << row.files << ',' << row.clients << ',';
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f", row.mean_ms, row.p95_ms);
    os << buf << ',' << row.note << '\n';
  }
  return os.str();
}

std::string bench_gnuplot(const std::vector<BenchRow>& rows) {
  std::vector<std::string> ops;
  for (const auto& row : rows) {
    if (std::find(ops.begin(), ops.end(), row.op) == ops.end()) ops.push_back(row.op);
  }
  std::ostringstream os;
  char buf[64];
  bool first = true;
  for (const auto& op : ops) {
    if (!first) os << "\n\n";
    first = false;
    os << "# op=" << op << "\n# keywords files clients mean_ms p95_ms\n";
    for (const auto& row : rows) {
      if (row.op != op) continue;
      std::snprintf(buf, sizeof(buf), "%.6f %.6f", row.mean_ms, row.p95_ms);
      os << row.keywords << ' ' << row.files << ' ' << row.clients << ' ' << buf << '\n';
    }
  }
  return os.str();
}

}  // namespace ssevault
