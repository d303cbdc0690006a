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

#ifndef RESUMERANK_ENTITIES_HPP_
#define RESUMERANK_ENTITIES_HPP_

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "resumerank/corpus.hpp"

namespace resumerank::entities {

struct YearMonth {
  int year = 0;
  int month = 1;  // 1..12
  friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

// Months since year zero; all duration arithmetic runs on this scale.
int month_index(YearMonth ym);

// "Present" resolves to a fixed date, never the wall clock, so parses are
// reproducible. Overridable per call and via the CLI --reference-date flag.
inline constexpr YearMonth kDefaultReferenceDate{2023, 6};

struct DateRange {
  YearMonth start;
  YearMonth end;  // invariant: start <= end
};

struct Gazetteer {
  enum class Kind { skills, cities, colleges, degrees };
  Kind kind = Kind::skills;
  std::vector<std::string> entries;  // normalized lowercase, file order

  // One entry per line, '#' comments allowed; entries are normalized and
  // deduplicated. Empty result is a data error.
  static Gazetteer load(Kind kind, const std::filesystem::path& file);
};

struct Gazetteers {
  Gazetteer skills;
  Gazetteer cities;
  Gazetteer colleges;
  Gazetteer degrees;

  // Expects skills.txt, cities.txt, colleges.txt, degrees.txt inside dir.
  static Gazetteers load_dir(const std::filesystem::path& dir);
};

struct ParsedResume {
  std::string doc_id;
  std::string name;
  std::optional<std::string> email;
  std::optional<std::string> number;
  std::optional<std::string> city;
  std::vector<std::string> work_exp;   // verbatim non-empty section lines
  std::vector<std::string> education;  // verbatim non-empty section lines
  int work_duration_months = 0;
  int education_duration_months = 0;
  std::vector<std::string> skills;     // display form, first-occurrence order
  std::vector<std::string> colleges;   // normalized; used by the eval harness
  std::vector<std::string> degrees;    // normalized; used by the eval harness
  std::optional<double> rating;        // [0,10]
};

// First local@domain.tld token in document order.
std::optional<std::string> extract_email(std::string_view doc_text);

// First run of 10-13 digits with ()-. separators and optional '+' country
// code, returned verbatim.
std::optional<std::string> extract_phone(std::string_view doc_text);

// Filename stem with '_'/'-'/'.' turned into spaces, title-cased; falls back
// to the first non-empty text line when the stem is empty.
std::string extract_name(std::string_view filename, std::string_view doc_text);

// First whole-word gazetteer hit in document order, title-cased.
std::optional<std::string> extract_city(std::string_view doc_text, const Gazetteer& cities);

// Splits at header lines (work/experience/employment; education/academic;
// skills/technologies). Keys: "preamble", "work", "education", "skills".
std::map<std::string, std::vector<std::string>> segment_sections(std::string_view doc_text);

// Parses "MonthName YYYY - MonthName YYYY" or "MonthName YYYY - Present"
// (hyphen, en dash or em dash; case-insensitive). Throws DataError when the
// start lies after the end.
std::optional<DateRange> parse_date_range(std::string_view line,
                                          YearMonth reference = kDefaultReferenceDate);

// Union of the ranges on the month timeline; overlaps never double-count.
int total_duration_months(std::vector<DateRange> ranges);

// 43 -> "3 years 7 months".
std::string format_duration(int months);

// Every whole-word gazetteer hit, deduplicated, title-cased, first-occurrence
// order.
std::vector<std::string> extract_skills(std::string_view doc_text, const Gazetteer& skills);

std::vector<std::string> extract_colleges(std::string_view doc_text, const Gazetteer& colleges);

// Degree patterns plus the field-of-study tail on the same line:
// "B.S. Computer Science" -> "b.s. computer science".
std::vector<std::string> extract_degrees(std::string_view doc_text, const Gazetteer& degrees);

ParsedResume parse_resume(const corpus::RawDocument& raw, const Gazetteers& gazetteers,
                          YearMonth reference = kDefaultReferenceDate);

// JSON with exactly the fields name, email, number, city, work_exp,
// education, work_duration, education_duration, skills, rating; durations as
// "Y years M months", skills comma-joined, absent values null.
nlohmann::ordered_json to_json(const ParsedResume& resume);

}  // namespace resumerank::entities

#endif  // RESUMERANK_ENTITIES_HPP_
