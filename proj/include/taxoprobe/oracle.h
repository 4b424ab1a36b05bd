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

// Black-box question answering oracles.
//
// An oracle maps (context, question, options) to one score per option. The
// chosen answer is the argmax, lowest index on ties. Three backends exist:
//
//   remote_qa          POST <endpoint>/v1/answer, scores come from the server
//   remote_completion  OpenAI-style POST <endpoint>/v1/completions with
//                      temperature 0; the text is mapped onto the options by
//                      NormalizeAnswer (one-hot scores, abstain otherwise)
//   mock               deterministic rule sets for tests and dry runs

#ifndef TAXOPROBE_ORACLE_H_
#define TAXOPROBE_ORACLE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "taxoprobe/promptgen.h"
#include "taxoprobe/taxonomy.h"

namespace taxoprobe {

enum class OracleKind { kRemoteQa, kRemoteCompletion, kMock };

enum class MockRule {
  kFirstOption,      // always option 0
  kStereotype,       // prefers one gender per occupation
  kAttributeDriven,  // seeded possession, stage 2 follows possession counts
};

struct MockRuleset {
  MockRule rule = MockRule::kFirstOption;
  std::map<std::string, Gender> preferences;  // kStereotype
  uint64_t seed = 0;                          // kAttributeDriven
  double yes_rate = 0.5;                      // kAttributeDriven
};

struct OracleSpec {
  OracleKind kind = OracleKind::kMock;
  std::string model_name = "mock";
  std::optional<std::string> endpoint;
  int timeout_ms = 30000;
  int max_retries = 3;
  int parallelism = 4;
  double max_requests_per_second = 0.0;  // 0 disables rate limiting
  int backoff_initial_ms = 200;
  int backoff_max_ms = 10000;
  // remote_qa: abstain when the server's no_answer_score exceeds this.
  double no_answer_threshold = 0.5;
  // remote_completion
  std::string api_key_env;
  int max_tokens = 16;
  MockRuleset mock;

  // Throws ConfigError.
  void Validate() const;

  // Digest over the fields that can change answers. Transport settings
  // (timeouts, retries, parallelism, rate limits) are excluded, and secrets
  // are never part of the spec.
  std::string Fingerprint() const;
};

struct OracleResponse {
  std::string probe_id;
  std::vector<double> scores;
  std::string raw_text;
  std::optional<size_t> chosen_index;
  bool abstained = false;
  bool tie = false;
};

// Builds a response from backend scores: argmax with lowest-index ties, or
// an abstention (chosen_index empty). Throws OracleError on non-finite
// scores.
OracleResponse MakeResponse(std::string probe_id, std::vector<double> scores,
                            std::string raw_text, bool abstained);

class Oracle {
 public:
  virtual ~Oracle() = default;

  // Safe to call concurrently.
  virtual OracleResponse Answer(const Probe& probe) = 0;

  virtual const OracleSpec& spec() const = 0;
};

std::unique_ptr<Oracle> MakeOracle(const OracleSpec& spec);

// Convenience for one-off calls; builds a fresh oracle.
OracleResponse Answer(const OracleSpec& spec, const Probe& probe);

OracleSpec MockFirstOption();
OracleSpec MockStereotype(std::map<std::string, Gender> preferences);
OracleSpec MockAttributeDriven(uint64_t seed, double yes_rate = 0.5);

// Prompt sent to completion backends: context, question, and the options
// separated by "; ", ending in "Answer:".
std::string CompletionPrompt(const Probe& probe);

// The attribute-driven mock's stage-1 decision for one probe.
bool AttributeDrivenAffirms(const MockRuleset& rules, const Probe& probe);

void to_json(nlohmann::json& j, const OracleSpec& spec);
void from_json(const nlohmann::json& j, OracleSpec& spec);
void to_json(nlohmann::json& j, const OracleResponse& response);
void from_json(const nlohmann::json& j, OracleResponse& response);

}  // namespace taxoprobe

#endif  // TAXOPROBE_ORACLE_H_
