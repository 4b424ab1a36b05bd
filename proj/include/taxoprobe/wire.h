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

// The /v1/answer adapter protocol.
//
//   POST /v1/answer
//   {"context": str, "question": str, "options": [str, ...]}
//
//   200 {"scores": [float, ...], "raw": str, "no_answer_score": float|null}
//   4xx malformed request, 5xx retryable failure
//
// Servers may add fields (e.g. a footer version); clients ignore them.

#ifndef TAXOPROBE_WIRE_H_
#define TAXOPROBE_WIRE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taxoprobe {

inline constexpr std::string_view kAnswerPath = "/v1/answer";
inline constexpr std::string_view kHealthPath = "/healthz";

struct AnswerRequest {
  std::string context;
  std::string question;
  std::vector<std::string> options;
};

struct AnswerReply {
  std::vector<double> scores;
  std::string raw;
  std::optional<double> no_answer_score;
};

std::string EncodeAnswerRequest(const AnswerRequest& request);

// Throws std::invalid_argument describing the first problem; servers map it
// to 400. Requires all three fields and a non-empty option list.
AnswerRequest DecodeAnswerRequest(std::string_view body);

std::string EncodeAnswerReply(const AnswerReply& reply);

// Throws OracleError (not retryable) on a malformed payload.
AnswerReply DecodeAnswerReply(std::string_view body);

}  // namespace taxoprobe

#endif  // TAXOPROBE_WIRE_H_
