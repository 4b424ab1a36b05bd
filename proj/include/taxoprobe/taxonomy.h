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

// Occupation taxonomy and gendered name pair ingestion.
//
// The occupations file holds one attribute rating per row:
//
//   title,soc_code,category,attribute_name,importance
//   dancer,27-2031.00,skill,Active Listening,71.0
//
// Files ending in .jsonl carry the same fields as one JSON object per line.
// Rows for one title may appear anywhere in the file; the occupation keeps
// the position of its first row. The name pairs file has columns
// female,male and pair ids follow row order starting at 0.

#ifndef TAXOPROBE_TAXONOMY_H_
#define TAXOPROBE_TAXONOMY_H_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace taxoprobe {

enum class Category { kSkill = 0, kKnowledge = 1, kAbility = 2 };

inline constexpr std::array<Category, 3> kCategories = {
    Category::kSkill, Category::kKnowledge, Category::kAbility};

std::string_view CategoryName(Category category);
std::optional<Category> ParseCategory(std::string_view label);

enum class Gender { kFemale, kMale };

std::string_view GenderName(Gender gender);
std::optional<Gender> ParseGender(std::string_view label);

struct AttributeRating {
  std::string name;
  Category category = Category::kSkill;
  double importance = 0.0;
};

struct OccupationEntry {
  std::string title;
  std::string soc_code;
  std::vector<AttributeRating> ratings;
};

struct NamePair {
  int pair_id = 0;
  std::string female;
  std::string male;

  const std::string& name(Gender g) const {
    return g == Gender::kFemale ? female : male;
  }
};

// A (category, name) attribute reference. The same name can be rated under
// two categories (e.g. Mathematics as a skill and as knowledge).
struct AttributeRef {
  Category category = Category::kSkill;
  std::string name;

  friend bool operator==(const AttributeRef&, const AttributeRef&) = default;
  friend auto operator<=>(const AttributeRef&, const AttributeRef&) = default;
};

struct AttributeSelection {
  std::string occupation;
  std::array<std::vector<std::string>, 3> per_category;

  const std::vector<std::string>& of(Category c) const {
    return per_category[static_cast<size_t>(c)];
  }
  size_t total() const;
  // Selected attributes in (category, rank) order.
  std::vector<AttributeRef> Flatten() const;
};

std::vector<OccupationEntry> LoadTaxonomy(const std::filesystem::path& path);
std::vector<OccupationEntry> ParseTaxonomyCsv(std::istream& in,
                                              const std::string& source);
std::vector<OccupationEntry> ParseTaxonomyJsonl(std::istream& in,
                                                const std::string& source);

std::vector<NamePair> LoadNamePairs(const std::filesystem::path& path);
std::vector<NamePair> ParseNamePairs(std::istream& in,
                                     const std::string& source);

// Per category: importance descending, ties by name ascending, truncated to k.
// Throws std::invalid_argument if k < 1.
AttributeSelection SelectTopAttributes(const OccupationEntry& entry, int k);

void to_json(nlohmann::json& j, const AttributeRef& ref);
void from_json(const nlohmann::json& j, AttributeRef& ref);
void to_json(nlohmann::json& j, const NamePair& pair);

}  // namespace taxoprobe

#endif  // TAXOPROBE_TAXONOMY_H_
