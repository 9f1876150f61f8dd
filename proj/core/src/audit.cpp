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

#include "ssevault/audit.hpp"

#include <algorithm>
#include <sstream>

namespace ssevault {

namespace {

bool kind_known(TranscriptKind kind) {
  switch (kind) {
    case TranscriptKind::kSearch:
    case TranscriptKind::kUpdate:
    case TranscriptKind::kRevoke:
    case TranscriptKind::kStore:
    case TranscriptKind::kFetch:
      return true;
  }
  return false;
}

bool takes_interval(TranscriptKind kind) {
  return kind == TranscriptKind::kSearch || kind == TranscriptKind::kUpdate ||
         kind == TranscriptKind::kStore;
}

bool takes_addr(TranscriptKind kind) { return kind != TranscriptKind::kFetch; }

}  // namespace

LeakageReport audit_leakage(const std::vector<ShardTranscript>& transcripts,
                            const std::vector<GroundTruthEvent>& ground_truth) {
  LeakageReport report;
  report.pass = true;
  auto flag = [&](const std::string& where, const std::string& field) {
    report.pass = false;
    report.offending_fields.push_back(where + ": " + field);
  };

  for (const auto& shard : transcripts) {
    std::string shard_tag = "shard " + hex_encode(shard.shard_addr);
    uint64_t prev_ts = 0;
    for (size_t i = 0; i < shard.records.size(); ++i) {
      const TranscriptRecord& rec = shard.records[i];
      std::string where = shard_tag + " record " + std::to_string(i);

      if (rec.ts <= prev_ts) flag(where, "ts (not strictly increasing)");
      prev_ts = rec.ts;
      if (!kind_known(rec.kind)) {
        flag(where, "kind (unknown value " + std::to_string(static_cast<int>(rec.kind)) + ")");
        continue;
      }

      // The whitelist: addr, timestamp, ciphertext interval, status. Any
      // extra field is leakage by definition.
      for (const auto& [key, value] : rec.extras) {
        flag(where, "'" + key + "' (beyond addr/timestamp/interval/status)");
      }
      if (!takes_addr(rec.kind) && !rec.addr.empty()) {
        flag(where, "addr (present on a blob fetch)");
      }
      if (takes_interval(rec.kind)) {
        if (rec.status == WireStatus::kOk && rec.base != 0 && rec.cur < rec.base) {
          flag(where, "interval (cur < base)");
        }
      } else if (rec.base != 0 || rec.cur != 0) {
        flag(where, "interval (present on a non-ciphertext operation)");
      }

      std::string addr_hex = hex_encode(rec.addr);
      switch (rec.kind) {
        case TranscriptKind::kSearch:
          report.sp[addr_hex].push_back(rec.ts);
          break;
        case TranscriptKind::kUpdate:
          report.updates[addr_hex].push_back(rec.ts);
          report.up_hist[addr_hex].emplace_back(rec.ts, "op-unknown");
          break;
        default:
          break;
      }
    }
  }

  for (const auto& ev : ground_truth) {
    auto& surviving = report.time_db[ev.keyword];
    if (ev.op == UpdateOp::kAdd) {
      for (uint32_t id : ev.file_ids) surviving.emplace_back(ev.ts, id);
    } else {
      for (uint32_t id : ev.file_ids) {
        auto it = std::find_if(surviving.begin(), surviving.end(),
                               [id](const auto& p) { return p.second == id; });
        if (it != surviving.end()) surviving.erase(it);
      }
    }
  }

  return report;
}

std::string LeakageReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL");
  size_t searches = 0, update_count = 0;
  for (const auto& [addr, ts] : sp) searches += ts.size();
  for (const auto& [addr, ts] : updates) update_count += ts.size();
  os << ": " << sp.size() << " searched addresses (" << searches << " queries), "
     << update_count << " updates, " << time_db.size() << " keywords in ground truth";
  if (!pass) {
    os << "; offending fields:";
    for (const auto& f : offending_fields) os << "\n  " << f;
  }
  return os.str();
}

}  // namespace ssevault
