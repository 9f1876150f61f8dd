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

// Microbenchmarks for the primitive layer plus one end-to-end search. The
// chameleon pair is generated once per binary run; individual benchmarks
// share it so the timings isolate the operation under test.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ssevault/ashe.hpp"
#include "ssevault/bignum.hpp"
#include "ssevault/bitstring.hpp"
#include "ssevault/bulletin.hpp"
#include "ssevault/chameleon.hpp"
#include "ssevault/client.hpp"
#include "ssevault/keytree.hpp"
#include "ssevault/owner.hpp"
#include "ssevault/prf.hpp"
#include "ssevault/registry.hpp"
#include "ssevault/rng.hpp"
#include "ssevault/server.hpp"

namespace {

using namespace ssevault;

const ChameleonKeyPair& shared_keys() {
  static const ChameleonKeyPair keys = [] {
    DetRng rng(2026);
    return ch_setup(160, 1024, rng);
  }();
  return keys;
}

void BM_PrfExpand(benchmark::State& state) {
  PrfKey key;
  DetRng rng(1);
  rng.fill(key.k.data(), key.k.size());
  Bytes input = rng.bytes(32);
  const size_t out_len = static_cast<size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(prf_expand(key, input, out_len));
  }
}
BENCHMARK(BM_PrfExpand)->Arg(16)->Arg(64)->Arg(256);

void BM_H1(benchmark::State& state) {
  DetRng rng(2);
  Bytes input = rng.bytes(48);
  const mpz_class& q = shared_keys().params.q;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h1(input, q));
  }
}
BENCHMARK(BM_H1);

void BM_ChHashPlain(benchmark::State& state) {
  const auto& keys = shared_keys();
  DetRng rng(3);
  mpz_class x = sample_scalar(rng, keys.params.q);
  mpz_class r = sample_scalar(rng, keys.params.q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ch_hash(keys.params, x, r));
  }
}
BENCHMARK(BM_ChHashPlain);

void BM_ChHashFixedBase(benchmark::State& state) {
  const auto& keys = shared_keys();
  ChameleonEvaluator eval(keys.params);
  DetRng rng(4);
  mpz_class x = sample_scalar(rng, keys.params.q);
  mpz_class r = sample_scalar(rng, keys.params.q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.hash(x, r));
  }
}
BENCHMARK(BM_ChHashFixedBase);

void BM_ChForge(benchmark::State& state) {
  const auto& keys = shared_keys();
  DetRng rng(5);
  mpz_class x = sample_scalar(rng, keys.params.q);
  mpz_class x2 = sample_scalar(rng, keys.params.q);
  mpz_class r = sample_scalar(rng, keys.params.q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ch_forge(keys.params, keys.trapdoor, x, x2, r));
  }
}
BENCHMARK(BM_ChForge);

void BM_AsheEncrypt(benchmark::State& state) {
  const size_t gamma = static_cast<size_t>(state.range(0));
  DetRng rng(6);
  AsheKey key{PrfKey::from_bytes(rng.bytes(kPrfKeyLen))};
  BitString m(gamma);
  for (size_t i = 0; i < gamma; i += 3) m.set(i, true);
  uint64_t st = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ashe_encrypt(key, m, st));
    ++st;
  }
}
BENCHMARK(BM_AsheEncrypt)->Arg(64)->Arg(1024);

void BM_AsheAdd(benchmark::State& state) {
  const size_t gamma = static_cast<size_t>(state.range(0));
  DetRng rng(7);
  AsheKey key{PrfKey::from_bytes(rng.bytes(kPrfKeyLen))};
  BitString m(gamma);
  m.set(0, true);
  StatefulCiphertext a = ashe_encrypt(key, m, 1);
  StatefulCiphertext b = ashe_encrypt(key, m, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ashe_add(a, b));
  }
}
BENCHMARK(BM_AsheAdd)->Arg(64)->Arg(1024);

void BM_CoverComputation(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  std::vector<uint32_t> clients;
  for (uint32_t id = 1; id <= n; ++id) clients.push_back(id);
  DetRng rng(8);
  PrfKey master = PrfKey::from_bytes(rng.bytes(kPrfKeyLen));
  KeyTree tree(master, clients);
  std::set<uint32_t> authorized;
  for (uint32_t id = 1; id <= n; ++id) {
    if (id % 7 != 0) authorized.insert(id);  // scattered holes force a wide cover
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(roots_subtrees(tree, authorized));
  }
}
BENCHMARK(BM_CoverComputation)->Arg(256)->Arg(1024);

struct SearchFixture {
  Owner owner;
  Bulletin bulletin;
  std::unique_ptr<StorageServer> server;
  InprocTransport transport;
  std::unique_ptr<Client> client;
  Label16 label{};

  SearchFixture()
      : owner([] {
          OwnerConfig oc;
          oc.gamma = 64;
          oc.clients = {1, 2, 3, 4};
          oc.attribute_of["kw"] = "att";
          DetRng rng(9);
          return Owner::init(std::move(oc), rng, shared_keys());
        }()) {
    owner.publish_enrollment(bulletin);
    auto shards = owner.build_edb({{"kw", {0, 2, 5, 9}}}, bulletin);
    server = std::make_unique<StorageServer>(shards[0].shard_addr, owner.evaluator());
    for (const auto& [addr, r, e] : shards[0].entries) server->store_entry(addr, r, e);
    transport.attach(server.get());
    owner.authorize("kw", {1, 2, 3, 4}, bulletin);
    client = std::make_unique<Client>(owner.credentials_for(1), owner.evaluator());
    client->recover_pathkey(bulletin);
    label = owner.keyword_label("kw");
  }
};

void BM_SearchWarm(benchmark::State& state) {
  SearchFixture fx;
  fx.client->search(fx.transport, fx.bulletin, fx.label);  // prime the credential cache
  for (auto _ : state) {
    benchmark::DoNotOptimize(fx.client->search(fx.transport, fx.bulletin, fx.label));
  }
}
BENCHMARK(BM_SearchWarm);

void BM_SearchColdUnlock(benchmark::State& state) {
  SearchFixture fx;
  for (auto _ : state) {
    state.PauseTiming();
    Client fresh(fx.owner.credentials_for(2), fx.owner.evaluator());
    fresh.recover_pathkey(fx.bulletin);
    state.ResumeTiming();
    benchmark::DoNotOptimize(fresh.search(fx.transport, fx.bulletin, fx.label));
  }
}
BENCHMARK(BM_SearchColdUnlock);

void BM_UpdateRoundTrip(benchmark::State& state) {
  SearchFixture fx;
  bool present = false;  // file 33 toggles in and out of the keyword's set
  for (auto _ : state) {
    UpdateMessage msg =
        fx.owner.make_update("kw", present ? UpdateOp::kDelete : UpdateOp::kAdd, {33});
    present = !present;
    benchmark::DoNotOptimize(remote_update(fx.transport, fx.server->address(), msg.addr, msg.e_up));
  }
}
BENCHMARK(BM_UpdateRoundTrip);

}  // namespace

BENCHMARK_MAIN();
