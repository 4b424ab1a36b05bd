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


// Run configuration, read from a single JSON file:
//
//   {
//     "data": {"occupations": "data/occupations.csv",
//              "name_pairs": "data/name_pairs.csv"},
//     "k": 5,
//     "run_dir": "runs/default",
//     "mirror_order": false,
//     "templates": {...},
//     "oracle": "roberta",
//     "oracles": {"roberta": {"kind": "remote_qa", ...}}
//   }
//
// Relative paths resolve against the directory holding the config file.
// "oracle" is either a name or an inline spec object. Names look in
// "oracles" first, then in the built-in mocks (see BuiltinOracle).

#ifndef TAXOPROBE_CONFIG_H_
#define TAXOPROBE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "taxoprobe/oracle.h"
#include "taxoprobe/templates.h"

namespace taxoprobe {

inline constexpr int kDefaultTopK = 5;

struct ConfigOverrides {
  std::optional<std::filesystem::path> run_dir;
  std::optional<std::string> oracle;
  std::optional<int> parallelism;
  std::optional<uint64_t> seed;
};

struct RunConfig {
  std::filesystem::path occupations_path;
  std::filesystem::path name_pairs_path;
  int k = kDefaultTopK;
  std::filesystem::path run_dir;
  bool mirror_order = false;
  TemplateSet templates;
  std::string oracle_name;
  OracleSpec oracle;

  // Everything that determines the generated probes and answers, with
  // absolute data paths.
  nlohmann::json Snapshot() const;
};

// "mock_first_option" and "mock_attribute_driven" (seed 0, yes_rate 0.5).
std::optional<OracleSpec> BuiltinOracle(const std::string& name);

// Throws ConfigError on a malformed or inconsistent config. --seed applies
// to mock oracles only.
RunConfig ParseConfig(const nlohmann::json& j,
                      const std::filesystem::path& base_dir,
                      const ConfigOverrides& overrides = {});
RunConfig LoadConfig(const std::filesystem::path& path,
                     const ConfigOverrides& overrides = {});

}  // namespace taxoprobe

#endif  // TAXOPROBE_CONFIG_H_
