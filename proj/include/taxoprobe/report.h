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

#ifndef TAXOPROBE_REPORT_H_
#define TAXOPROBE_REPORT_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "taxoprobe/metrics.h"

namespace taxoprobe {

inline constexpr int kReportDecimals = 6;

struct PlotSeries {
  std::vector<std::string> labels;
  std::vector<double> values;
};

// Bar-chart series in the fixed aspect order, starting with "consistency".
PlotSeries EmitPlotSeries(const AggregateScores& aggregates);

// report.csv layout:
//
//   aspect,score,numerator,denominator
//   <six aspect rows>
//
//   occupation,prefer_f,prefer_m,biased_f,biased_m,scored_cells
//   <one row per tally, in the given order>
std::string FormatReportCsv(const AggregateScores& aggregates,
                            std::span<const OccupationTally> occupations);

// Throws Error if the file cannot be written.
void EmitCsv(const AggregateScores& aggregates,
             std::span<const OccupationTally> occupations,
             const std::filesystem::path& path);

struct AspectRow {
  std::string aspect;
  double score = 0.0;
  size_t numerator = 0;
  size_t denominator = 0;
};

struct ParsedReport {
  std::vector<AspectRow> aspects;
  std::vector<OccupationTally> occupations;
};

// Throws DataError on a malformed report.
ParsedReport ParseReportCsv(std::istream& in);

// aggregates.json body: scores, numerators, denominators, abstain_rate,
// cell counts, rule version, denominator policy and "figure_series".
nlohmann::json AggregatesToJson(const AggregateScores& aggregates);
AggregateScores AggregatesFromJson(const nlohmann::json& j);

}  // namespace taxoprobe

#endif  // TAXOPROBE_REPORT_H_
