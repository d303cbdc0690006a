// Copyright 2026 The Resumerank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESUMERANK_EVAL_HPP_
#define RESUMERANK_EVAL_HPP_

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "resumerank/entities.hpp"

namespace resumerank::eval {

// Fixed entity set, in report row order.
inline constexpr std::array<std::string_view, 6> kEntityTypes = {
    "College Name", "Degree", "Email", "Location", "Name", "Skills"};

bool is_entity_type(std::string_view label);

// entity type -> normalized value set.
using EntitySets = std::map<std::string, std::set<std::string>>;

struct GoldAnnotation {
  std::string doc_id;
  EntitySets entities;
};

// JSON list of {"doc_id": ..., "entities": {type: [values]}}. Values are
// normalized on load; unknown entity types are a data error.
std::vector<GoldAnnotation> load_gold(const std::filesystem::path& file);

struct EntityMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold value count
};

// Set precision/recall with the conventions: both sets empty -> 1/1; one
// side empty -> 0/0. f1 is the harmonic mean with 0/0 -> 0.
EntityMetrics evaluate_entity(const std::set<std::string>& predicted,
                              const std::set<std::string>& gold);

// Derives the six predicted entity sets from a parsed resume.
EntitySets prediction_sets(const entities::ParsedResume& resume);

struct EvalReport {
  std::map<std::string, EntityMetrics> per_entity;
  EntityMetrics macro;          // unweighted mean over entity types
  double accuracy_all = 0.0;    // exact-match fraction over all cells
  double accuracy_skills = 0.0; // same, Skills cells only
};

// Per-entity metrics computed per resume then averaged across resumes.
// Throws DataError when ids do not align one-to-one.
EvalReport evaluate_corpus(const std::vector<entities::ParsedResume>& predictions,
                           const std::vector<GoldAnnotation>& golds);

// Fixed-width table, one row per entity type, three decimals.
std::string render_report(const EvalReport& report);

nlohmann::ordered_json report_json(const EvalReport& report);

}  // namespace resumerank::eval

#endif  // RESUMERANK_EVAL_HPP_
