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

// Maps free-form generated answers onto a closed answer space.
//
// Text and options are lowercased (ASCII), punctuation becomes whitespace,
// and whitespace runs collapse. Candidate phrases are the options plus the
// synonym classes
//
//   {both, both of them, the two}   -> the combined option ("X and Y")
//   {neither, none, no one}         -> the neither option
//
// Phrases are matched as whole-token runs, longest phrase first; tokens a
// longer phrase consumed cannot be reused by a shorter one, so "Amy and Bob"
// wins over "Amy". Exactly one distinct surviving option gives its index;
// zero or several survivors mean abstention.

#ifndef TAXOPROBE_NORMALIZE_H_
#define TAXOPROBE_NORMALIZE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace taxoprobe {

std::string NormalizeForMatch(std::string_view text);

std::optional<size_t> NormalizeAnswer(std::string_view raw,
                                      std::span<const std::string> options);

}  // namespace taxoprobe

#endif  // TAXOPROBE_NORMALIZE_H_
