// Copyright 2026 The pgroup-family Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file census.hpp
 * @brief Classifying every group of a pc dataset, with a resumable cache and
 * JSON/CSV reports.
 *
 * The cache is one append-only file per dataset,
 * `<dir>/census_<order>_<digest>.jsonl`, holding one JSON record per line.
 * A rerun skips every group id already present; a torn last line is ignored.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pgf/error.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/lattice.hpp"
#include "pgf/pc_presentation.hpp"
#include "pgf/semiabelian.hpp"

namespace pgf {

struct CensusRecord {
  GroupId id;
  std::string provenance;
  unsigned rank = 0;
  unsigned derived_length = 0;
  bool semiabelian = false;
  Screen screen = Screen::inconclusive;
  std::uint64_t elapsed_ms = 0;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusFailure {
  GroupId id;
  std::string message;
};

struct CensusSummary {
  std::uint64_t order = 0;
  std::size_t total = 0;
  std::size_t non_semiabelian = 0;
  std::uint64_t wall_time_ms = 0;
  std::size_t from_cache = 0;
  bool complete = true;  // false when stopped early by `limit`
  std::vector<CensusFailure> failures;
  std::string dataset;

  bool ok() const { return complete && failures.empty(); }
};

struct CensusResult {
  CensusSummary summary;
  std::vector<CensusRecord> records;  // sorted by id
};

struct CensusOptions {
  std::string provenance;                   // label stored in every record
  unsigned jobs = 0;                        // 0: hardware concurrency
  std::optional<std::filesystem::path> cache_dir;
  std::uint64_t order_cap = kDefaultCensusOrderCap;
  bool timing = true;                       // false: elapsed_ms and wall time are 0
  std::optional<std::size_t> limit;         // classify at most this many new groups
};

/// Checks the record-level invariants; returns a description of the first
/// violation, or an empty string.
inline std::string record_violation(const CensusRecord& r) {
  if (r.semiabelian && r.derived_length > r.rank) {
    return "semiabelian group with derived length " + std::to_string(r.derived_length) +
           " > rank " + std::to_string(r.rank);
  }
  if (r.screen == Screen::definitely_not_member && r.semiabelian) {
    return "screen excludes a group judged semiabelian";
  }
  return {};
}

/// Classifies one group. The dl/rank screen is computed first but the full
/// search always runs, so the two can be cross-checked.
inline CensusRecord classify(const PcEntry& e, const std::string& provenance,
                             std::uint64_t order_cap = kDefaultCensusOrderCap, bool timing = true) {
  const auto start = std::chrono::steady_clock::now();
  const PcPresentation& pc = e.presentation;
  if (pc.order() != e.id.order) throw Error("presentation order differs from the group id");
  PermGroup g = pc_to_perm(pc);
  if (g.order() != pc.order()) {
    throw Error("permutation order " + std::to_string(g.order()) +
                " differs from presentation order " + std::to_string(pc.order()));
  }
  CensusRecord r;
  r.id = e.id;
  r.provenance = provenance;
  if (!g.is_trivial()) {
    r.rank = rank(g, pc.prime());
    r.derived_length = derived_length(g);
    r.screen = dl_rank_screen(g, pc.prime());
  }
  SemiabelianVerdict v = is_semiabelian(g, order_cap);
  if (v.flag && !validate_witness(g, v)) throw Error("semiabelian witness failed re-validation");
  r.semiabelian = v.flag;
  if (timing) {
    r.elapsed_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                  std::chrono::steady_clock::now() - start)
                                                  .count());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::ordered_json to_json(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["order"] = r.id.order;
  j["index"] = r.id.index;
  j["provenance"] = r.provenance;
  j["rank"] = r.rank;
  j["dl"] = r.derived_length;
  j["semiabelian"] = r.semiabelian;
  j["screen"] = to_string(r.screen);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline CensusRecord record_from_json(const nlohmann::json& j) {
  CensusRecord r;
  r.id = GroupId{j.at("order").get<std::uint64_t>(), j.at("index").get<std::uint64_t>()};
  r.provenance = j.at("provenance").get<std::string>();
  r.rank = j.at("rank").get<unsigned>();
  r.derived_length = j.at("dl").get<unsigned>();
  r.semiabelian = j.at("semiabelian").get<bool>();
  const std::string screen = j.at("screen").get<std::string>();
  if (screen == "definitely_not_member") {
    r.screen = Screen::definitely_not_member;
  } else if (screen == "inconclusive") {
    r.screen = Screen::inconclusive;
  } else {
    throw Error("unknown screen value '" + screen + "'");
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
  return r;
}

enum class ReportFormat { json, csv };

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string fnv_hex(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detail

inline constexpr const char* kCensusCsvHeader =
    "order,index,provenance,rank,dl,semiabelian,screen,elapsed_ms";

/// JSON: {"summary": {...}, "records": [...]}. CSV: header plus one line per
/// record. Output depends only on the arguments.
inline std::string emit_report(const std::vector<CensusRecord>& records,
                               const CensusSummary& summary, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::string out = std::string(kCensusCsvHeader) + "\n";
    for (const CensusRecord& r : records) {
      out += std::to_string(r.id.order) + "," + std::to_string(r.id.index) + "," +
             detail::csv_field(r.provenance) + "," + std::to_string(r.rank) + "," +
             std::to_string(r.derived_length) + "," + (r.semiabelian ? "true" : "false") + "," +
             to_string(r.screen) + "," + std::to_string(r.elapsed_ms) + "\n";
    }
    return out;
  }
  nlohmann::ordered_json s;
  s["order"] = summary.order;
  s["total"] = summary.total;
  s["non_semiabelian"] = summary.non_semiabelian;
  s["complete"] = summary.complete;
  s["dataset"] = summary.dataset;
  s["wall_time_ms"] = summary.wall_time_ms;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const CensusFailure& f : summary.failures) {
    fails.push_back({{"order", f.id.order}, {"index", f.id.index}, {"message", f.message}});
  }
  s["failures"] = fails;
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const CensusRecord& r : records) recs.push_back(to_json(r));
  nlohmann::ordered_json doc;
  doc["summary"] = s;
  doc["records"] = recs;
  return doc.dump(2) + "\n";
}

/// Overload for a bare record list; the summary is derived from it.
inline std::string emit_report(const std::vector<CensusRecord>& records, ReportFormat format) {
  CensusSummary s;
  s.total = records.size();
  for (const CensusRecord& r : records) {
    s.order = r.id.order;
    if (!r.semiabelian) ++s.non_semiabelian;
  }
  return emit_report(records, s, format);
}

/// Cache file for a dataset: keyed by order and a digest of its canonical
/// serialization.
inline std::filesystem::path census_cache_path(const std::filesystem::path& dir,
                                               const std::vector<PcEntry>& entries) {
  const std::uint64_t order = entries.empty() ? 0 : entries.front().id.order;
  return dir / ("census_" + std::to_string(order) + "_" +
                detail::fnv_hex(serialize_pc(entries)) + ".jsonl");
}

/// Cache directory from the options, else from PGF_CACHE, else none.
inline std::optional<std::filesystem::path> resolve_cache_dir(
    const std::optional<std::filesystem::path>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("PGF_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

/// Classifies every group in `entries` (one order, one prime). Failures are
/// recorded per group, never skipped silently.
inline CensusResult run_census(const std::vector<PcEntry>& entries, const CensusOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  CensusResult res;
  res.summary.dataset = opt.provenance;
  if (!entries.empty()) {
    res.summary.order = entries.front().id.order;
    for (const PcEntry& e : entries) {
      if (e.id.order != res.summary.order || e.presentation.prime() != entries.front().presentation.prime()) {
        throw Error("census dataset mixes orders or primes (group " + e.id.to_string() + ")");
      }
    }
  }

  std::map<GroupId, CensusRecord> done;
  std::optional<std::filesystem::path> cache_file;
  if (opt.cache_dir && !entries.empty()) {
    std::filesystem::create_directories(*opt.cache_dir);
    cache_file = census_cache_path(*opt.cache_dir, entries);
    std::ifstream in(*cache_file);
    std::string line;
    while (std::getline(in, line)) {
      try {
        CensusRecord r = record_from_json(nlohmann::json::parse(line));
        done.emplace(r.id, std::move(r));
      } catch (const std::exception&) {
        // Torn or foreign line: the group is recomputed.
      }
    }
  }

  std::vector<std::size_t> todo;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!done.count(entries[k].id)) todo.push_back(k);
  }
  res.summary.from_cache = entries.size() - todo.size();
  if (opt.limit && todo.size() > *opt.limit) {
    todo.resize(*opt.limit);
    res.summary.complete = false;
  }

  std::vector<std::optional<CensusRecord>> slots(todo.size());
  std::vector<std::string> errors(todo.size());
  std::mutex writer;
  std::ofstream cache_out;
  if (cache_file) {
    // Start on a fresh line if the previous run was cut off mid-record.
    bool torn = false;
    if (std::ifstream tail(*cache_file, std::ios::binary | std::ios::ate); tail && tail.tellg() > 0) {
      tail.seekg(-1, std::ios::end);
      torn = tail.get() != '\n';
    }
    cache_out.open(*cache_file, std::ios::app);
    if (torn) cache_out << '\n';
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < todo.size();) {
      const PcEntry& e = entries[todo[t]];
      try {
        CensusRecord r = classify(e, opt.provenance, opt.order_cap, opt.timing);
        if (cache_file) {
          std::lock_guard<std::mutex> lock(writer);
          cache_out << to_json(r).dump() << '\n';
          cache_out.flush();
        }
        slots[t] = std::move(r);
      } catch (const std::exception& ex) {
        errors[t] = ex.what();
      }
    }
  };
  unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(todo.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t t = 0; t < todo.size(); ++t) {
    if (slots[t]) {
      done.emplace(slots[t]->id, std::move(*slots[t]));
    } else {
      res.summary.failures.push_back({entries[todo[t]].id, errors[t]});
    }
  }
  for (auto& [id, r] : done) {
    if (std::string v = record_violation(r); !v.empty()) {
      res.summary.failures.push_back({id, "invariant violation: " + v});
    }
    res.records.push_back(std::move(r));
  }
  std::sort(res.summary.failures.begin(), res.summary.failures.end(),
            [](const CensusFailure& a, const CensusFailure& b) { return a.id < b.id; });
  res.summary.total = res.records.size();
  for (const CensusRecord& r : res.records) {
    if (!r.semiabelian) ++res.summary.non_semiabelian;
  }
  if (opt.timing) {
    res.summary.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count());
  }
  return res;
}

}  // namespace pgf
