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

#ifndef TAXOPROBE_DIGEST_H_
#define TAXOPROBE_DIGEST_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace taxoprobe {

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);

// Digest of a file's bytes. Throws DataError if the file cannot be read.
std::string FileSha256Hex(const std::filesystem::path& path);

// First 8 bytes of SHA-256 as an integer; used for seeded mock decisions.
uint64_t Sha256Prefix64(std::string_view data);

}  // namespace taxoprobe

#endif  // TAXOPROBE_DIGEST_H_
