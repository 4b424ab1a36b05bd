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

// Probe rendering for both stages.
//
// Stage 1 asks, per selected attribute and per subject, whether the subject
// has the attribute. Stage 2 appends the affirmed attributes to the base
// context and asks the three comparison questions:
//
//   binary    c + A_k        [Yes, No]                  once per subject
//   single    c + A_1 + A_2  [S1, S2]
//   multiple  c + A_1 + A_2  [S1, S2, S1 and S2, Neither]
//
// Subject 1 is always the female name of the pair and subject 2 the male
// name. A mirrored probe lists the male name first in the context, the
// attribute blocks and the options; subject indices keep their meaning.

#ifndef TAXOPROBE_PROMPTGEN_H_
#define TAXOPROBE_PROMPTGEN_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "taxoprobe/taxonomy.h"
#include "taxoprobe/templates.h"

namespace taxoprobe {

enum class Stage { kStage1, kStage2 };
enum class QuestionType { kAttrPossession, kBinary, kSingle, kMultiple };

std::string_view StageName(Stage stage);
std::string_view QuestionTypeName(QuestionType qtype);

// Option positions within the fixed answer spaces.
inline constexpr size_t kYesIndex = 0;
inline constexpr size_t kNoIndex = 1;
inline constexpr size_t kCombinedIndex = 2;
inline constexpr size_t kNeitherIndex = 3;

struct Probe {
  std::string probe_id;
  Stage stage = Stage::kStage1;
  QuestionType qtype = QuestionType::kAttrPossession;
  int pair_id = 0;
  std::string occupation;
  int subject_index = 0;  // 1 (female), 2 (male) or 0 for none
  std::optional<AttributeRef> attribute;
  bool mirrored = false;
  std::string context;
  std::string question;
  std::vector<std::string> options;
  // Stage 2 only: attribute names appended for subject 1 and subject 2.
  std::array<std::vector<std::string>, 2> appended;
};

// Option index naming `subject` (1 or 2) in a single or multiple probe.
size_t SubjectOptionIndex(const Probe& probe, int subject);

// Subject (1 or 2) named by option `index` of a single or multiple probe;
// 0 for the combined and neither options.
int OptionSubject(const Probe& probe, size_t index);

// Digest of every field except probe_id.
std::string ComputeProbeId(const Probe& probe);

// Attributes the oracle affirmed for each subject of one (pair, occupation),
// in (category, rank) order.
struct PossessionEntry {
  int pair_id = 0;
  std::string occupation;
  std::array<std::vector<AttributeRef>, 2> possessed;
  int abstentions = 0;
};

using PossessionKey = std::pair<int, std::string>;
using PossessionMap = std::map<PossessionKey, PossessionEntry>;

struct Stage2Set {
  Probe binary1;
  Probe binary2;
  Probe single;
  Probe multiple;
};

std::string RenderContext(const NamePair& pair, std::string_view occupation,
                          const TemplateSet& templates, bool mirrored = false);

// One probe per (attribute, subject) in (category, rank, subject) order.
std::vector<Probe> GenStage1(const NamePair& pair, std::string_view occupation,
                             const AttributeSelection& selection,
                             const TemplateSet& templates,
                             bool mirrored = false);

// One sentence per distinct attribute name, in the given order, separated by
// single spaces. Empty input yields "".
std::string AttributeSentences(const NamePair& pair, int subject_index,
                               std::span<const AttributeRef> possessed,
                               const TemplateSet& templates);

Stage2Set GenStage2(const NamePair& pair, std::string_view occupation,
                    const PossessionEntry& possession,
                    const TemplateSet& templates, bool mirrored = false);

// Corpus-level generation: occupation-major, then pair order. Mirrored
// probes (when requested) follow their unmirrored counterpart.
std::vector<Probe> GenerateStage1Corpus(
    std::span<const AttributeSelection> selections,
    std::span<const NamePair> pairs, const TemplateSet& templates,
    bool with_mirrors);

// Throws RunError if a (pair, occupation) has no possession entry.
std::vector<Probe> GenerateStage2Corpus(
    std::span<const AttributeSelection> selections,
    std::span<const NamePair> pairs, const PossessionMap& possession,
    const TemplateSet& templates, bool with_mirrors);

void to_json(nlohmann::json& j, const Probe& probe);
void from_json(const nlohmann::json& j, Probe& probe);
void to_json(nlohmann::json& j, const PossessionEntry& entry);
void from_json(const nlohmann::json& j, PossessionEntry& entry);

}  // namespace taxoprobe

#endif  // TAXOPROBE_PROMPTGEN_H_
