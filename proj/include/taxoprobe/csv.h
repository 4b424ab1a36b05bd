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

#ifndef TAXOPROBE_CSV_H_
#define TAXOPROBE_CSV_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taxoprobe {

// Splits one CSV record (RFC 4180 quoting, no embedded newlines). Returns
// nullopt on an unterminated quote.
std::optional<std::vector<std::string>> SplitCsvLine(std::string_view line);

// Quotes a field when it contains a comma, quote or leading/trailing space.
std::string CsvField(std::string_view field);

// Strips a trailing '\r' and a leading UTF-8 BOM (first line only).
std::string_view TrimLineEnding(std::string_view line, bool first_line);

}  // namespace taxoprobe

#endif  // TAXOPROBE_CSV_H_
