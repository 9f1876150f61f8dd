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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ssevault {

// Timing sweep over a (keywords, files, clients) grid. Repetitions apply to
// the per-operation measurements (search, update, revoke); index generation
// is timed once per grid point since it is three orders of magnitude slower.
struct BenchConfig {
  std::vector<size_t> keywords{1000};
  std::vector<size_t> files{1000};
  std::vector<size_t> clients{100};
  size_t repetitions = 1000;
  uint64_t seed = 1;
  unsigned lambda_q = 160;
  unsigned lambda_p = 1024;
  // Concurrency smoke test: timings are suppressed and replaced with a
  // many-threaded search correctness sweep.
  bool stress = false;
};

struct BenchRow {
  std::string op;
  size_t keywords = 0;
  size_t files = 0;
  size_t clients = 0;
  double mean_ms = 0.0;
  double p95_ms = 0.0;
  std::string note;
};

// Synthetic dataset: with T = max(1, ceil(log2 d)) access types, type i
// (1-based) covers files 0..floor(d / 2^i); keyword j gets type (j mod T)+1.
// Fully deterministic in (w, d).
std::map<std::string, std::vector<uint32_t>> synth_db(size_t w, size_t d);

size_t synth_pair_count(size_t w, size_t d);

// One row per (op, grid point). Errors are reported in the row's note and
// the sweep continues with the next grid point.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);

// Same data shaped for gnuplot: one indexed block per op, x-columns
// keywords/files/clients followed by mean and p95.
std::string bench_gnuplot(const std::vector<BenchRow>& rows);

}  // namespace ssevault
