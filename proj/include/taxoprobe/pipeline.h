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


// Staged pipeline behind the command-line tool.
//
//   stage1  generate and answer attribute-possession probes
//   filter  derive possession.jsonl from the stage-1 answers
//   stage2  generate and answer the comparison probes
//   score   classify cells, write cells.jsonl and aggregates.json
//   report  write report.csv
//
// Each stage needs the previous one to have completed in the same run
// directory and is idempotent.

#ifndef TAXOPROBE_PIPELINE_H_
#define TAXOPROBE_PIPELINE_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "taxoprobe/config.h"
#include "taxoprobe/metrics.h"
#include "taxoprobe/oracle.h"
#include "taxoprobe/promptgen.h"
#include "taxoprobe/runner.h"
#include "taxoprobe/taxonomy.h"

namespace taxoprobe {

enum class PipelineStage { kStage1, kFilter, kStage2, kScore, kReport, kAll };

std::optional<PipelineStage> ParsePipelineStage(std::string_view name);

struct Dataset {
  std::vector<OccupationEntry> occupations;
  std::vector<NamePair> pairs;
  std::vector<AttributeSelection> selections;  // aligned with occupations
  std::string occupations_digest;
  std::string name_pairs_digest;
};

Dataset LoadDataset(const RunConfig& config);

// Digests bound into the manifest: both data files, the probe-shaping part
// of the config (k, mirror flag, templates) and the oracle.
nlohmann::json Fingerprints(const RunConfig& config, const Dataset& dataset,
                            const OracleSpec& oracle);

// Groups unmirrored stage-2 answers into cells in probe order. Throws
// RunError if a probe lacks a response or a cell lacks one of its four
// probes.
std::vector<ScoredCell> BuildCells(std::span<const Probe> probes,
                                   std::span<const OracleResponse> responses);

struct RunSummary {
  std::optional<RunStats> stage1;
  std::optional<RunStats> stage2;
  size_t backend_calls() const;
};

// Prints "<n> occupations, <m> pairs" and the per-occupation attribute
// count, then records fingerprints in the manifest.
void CmdIngest(const RunConfig& config, std::ostream& out);

// Runs `stage` (or the whole chain). `oracle` replaces the configured one
// when given. Throws RunError naming a missing prerequisite.
RunSummary CmdRun(const RunConfig& config, PipelineStage stage,
                  std::ostream& out, Oracle* oracle = nullptr);

// Writes report.csv from the scored cells and prints the aspect table and
// the top occupations per breakdown.
void CmdReport(const RunConfig& config, std::ostream& out);

}  // namespace taxoprobe

#endif  // TAXOPROBE_PIPELINE_H_
