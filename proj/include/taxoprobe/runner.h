/* Copyright 2026 The taxoprobe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Batch execution of probes against an oracle.
//
// Run directory layout:
//
//   manifest.json           config snapshot, fingerprints, stage flags
//   stage1_probes.jsonl     stage1_responses.jsonl
//   possession.jsonl
//   stage2_probes.jsonl     stage2_responses.jsonl
//   cells.jsonl             aggregates.json        report.csv
//   cache.jsonl             responses keyed by (oracle, context, question,
//                           options)
//   .lock                   held by the owning process
//
// Response and cache files are appended one record per line while a stage
// runs, then rewritten in canonical order when it completes. A crash leaves
// every finished answer on disk and a rerun picks up from there.

#ifndef TAXOPROBE_RUNNER_H_
#define TAXOPROBE_RUNNER_H_

#include <cstdio>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "taxoprobe/oracle.h"
#include "taxoprobe/promptgen.h"

namespace taxoprobe {

// Exclusive ownership of a run directory via an O_EXCL lock file holding the
// owner's pid. A lock left by a dead process is taken over.
class RunLock {
 public:
  explicit RunLock(const std::filesystem::path& run_dir);
  ~RunLock();
  RunLock(const RunLock&) = delete;
  RunLock& operator=(const RunLock&) = delete;

 private:
  std::filesystem::path path_;
};

class RunStore {
 public:
  // Creates the directory if needed and loads manifest.json when present.
  explicit RunStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path Path(std::string_view file) const { return dir_ / file; }

  const nlohmann::json& manifest() const { return manifest_; }

  // Records fingerprints on first use. Afterwards every key must match;
  // throws RunError naming the first mismatch.
  void BindFingerprints(const nlohmann::json& fingerprints);
  void SetConfigSnapshot(const nlohmann::json& snapshot);

  bool StageComplete(std::string_view stage) const;
  void SetStageComplete(std::string_view stage, bool complete);

 private:
  void SaveManifest();

  std::filesystem::path dir_;
  nlohmann::json manifest_;
};

// Append-only JSONL file. Each record is flushed to the OS on write; Sync()
// forces it to stable storage.
class JsonlAppender {
 public:
  explicit JsonlAppender(const std::filesystem::path& path);
  ~JsonlAppender();
  JsonlAppender(const JsonlAppender&) = delete;
  JsonlAppender& operator=(const JsonlAppender&) = delete;

  void Append(const nlohmann::json& record);
  void Sync();

 private:
  std::filesystem::path path_;
  std::FILE* file_ = nullptr;
};

// Reads a JSONL file. A malformed final line (torn write) is dropped; a
// malformed line elsewhere throws DataError. Missing file yields {}.
std::vector<nlohmann::json> ReadJsonl(const std::filesystem::path& path);

// Writes via a temporary file and rename.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view content);
void WriteJsonlAtomic(const std::filesystem::path& path,
                      std::span<const nlohmann::json> records);

std::string CacheKey(std::string_view oracle_fingerprint, const Probe& probe);

// Persistent response cache. Thread-safe. The first write for a key wins;
// later writes for the same key are discarded.
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path file);

  // Hit only when the stored option list equals `options`. The returned
  // response carries `probe_id`.
  std::optional<OracleResponse> Lookup(const std::string& key,
                                       const std::vector<std::string>& options,
                                       const std::string& probe_id) const;

  // Returns false if the key was already present.
  bool Insert(const std::string& key, const std::vector<std::string>& options,
              const OracleResponse& response);

  size_t size() const;

  // Syncs and rewrites the file sorted by key.
  void Compact();

 private:
  struct Entry {
    std::vector<std::string> options;
    OracleResponse response;
  };

  std::filesystem::path file_;
  mutable std::mutex mu_;
  std::map<std::string, Entry> entries_;
  std::optional<JsonlAppender> appender_;
};

struct RunStats {
  size_t probes = 0;
  size_t resumed = 0;     // already in the stage's response file
  size_t cache_hits = 0;  // served from cache.jsonl
  size_t backend_calls = 0;
};

// Answers every probe, reusing prior responses and the cache, calling the
// oracle at most once per unique cache key with up to
// oracle.spec().parallelism concurrent calls. Returns responses aligned with
// `probes`. On a backend failure the answers obtained so far stay on disk
// and RunError is thrown.
std::vector<OracleResponse> RunStage(RunStore& store, Oracle& oracle,
                                     std::span<const Probe> probes, Stage stage,
                                     RunStats* stats = nullptr);

// Possession from answered stage-1 probes. Mirrored probes are ignored. An
// attribute is possessed iff the chosen option is Yes; abstentions count as
// not possessed and are tallied per entry. Throws RunError if a probe has
// no response.
PossessionMap DerivePossession(std::span<const Probe> probes,
                               std::span<const OracleResponse> responses);

struct ProbeCounts {
  size_t stage1 = 0;
  size_t stage2 = 0;
};

ProbeCounts CountProbes(size_t occupations, size_t pairs,
                        size_t attributes_per_occupation);

}  // namespace taxoprobe

#endif  // TAXOPROBE_RUNNER_H_
