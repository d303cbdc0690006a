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

#include "resumerank/entities.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "resumerank/errors.hpp"
#include "resumerank/text.hpp"

namespace resumerank::entities {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// All whole-word gazetteer hits ordered by first occurrence; ties at the
// same offset prefer the longer (more specific) entry.
std::vector<std::pair<std::size_t, const std::string*>> gazetteer_hits(
    std::string_view doc_text, const Gazetteer& gazetteer) {
  const std::string lower = text::to_lower(doc_text);
  std::vector<std::pair<std::size_t, const std::string*>> hits;
  for (const std::string& entry : gazetteer.entries) {
    const std::size_t pos = text::find_whole_word(lower, entry);
    if (pos != std::string_view::npos) hits.emplace_back(pos, &entry);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second->size() != b.second->size()) return a.second->size() > b.second->size();
    return *a.second < *b.second;
  });
  return hits;
}

const std::regex& month_range_regex() {
  static const std::string month =
      "(jan(?:uary)?|feb(?:ruary)?|mar(?:ch)?|apr(?:il)?|may|jun(?:e)?|jul(?:y)?|"
      "aug(?:ust)?|sep(?:t(?:ember)?)?|oct(?:ober)?|nov(?:ember)?|dec(?:ember)?)";
  // Hyphen, en dash (U+2013) or em dash (U+2014) between the endpoints.
  static const std::string dash = "(?:-|\xE2\x80\x93|\xE2\x80\x94)";
  static const std::regex re("\\b" + month + "\\.?\\s+(\\d{4})\\s*" + dash + "\\s*(?:" + month +
                                 "\\.?\\s+(\\d{4})|(present))\\b",
                             std::regex::icase);
  return re;
}

int month_number(std::string_view name) {
  static const std::unordered_map<std::string, int> months = {
      {"jan", 1}, {"feb", 2}, {"mar", 3}, {"apr", 4},  {"may", 5},  {"jun", 6},
      {"jul", 7}, {"aug", 8}, {"sep", 9}, {"oct", 10}, {"nov", 11}, {"dec", 12}};
  return months.at(text::to_lower(name.substr(0, 3)));
}

// Header synonyms -> section label.
const std::unordered_map<std::string, std::string>& header_labels() {
  static const std::unordered_map<std::string, std::string> labels = {
      {"work experience", "work"},
      {"experience", "work"},
      {"employment", "work"},
      {"employment history", "work"},
      {"work history", "work"},
      {"professional experience", "work"},
      {"work", "work"},
      {"education", "education"},
      {"educational background", "education"},
      {"academic background", "education"},
      {"academic history", "education"},
      {"academics", "education"},
      {"education and training", "education"},
      {"skills", "skills"},
      {"technical skills", "skills"},
      {"skills & technologies", "skills"},
      {"technologies", "skills"},
      {"skill set", "skills"},
      {"core competencies", "skills"},
  };
  return labels;
}

// Strips decoration ("--- SKILLS ---", "EXPERIENCE:") down to the bare
// header phrase used for the synonym lookup.
std::string clean_header(std::string_view line) {
  std::size_t a = 0;
  std::size_t b = line.size();
  const auto is_edge = [](unsigned char c) { return std::isalnum(c) == 0; };
  while (a < b && is_edge(static_cast<unsigned char>(line[a]))) ++a;
  while (b > a && is_edge(static_cast<unsigned char>(line[b - 1]))) --b;
  return text::normalize_entry(line.substr(a, b - a));
}

// Drops leading whitespace and bullet markers; trims the tail.
std::string strip_bullet(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size()) {
    const unsigned char c = line[i];
    if (std::isspace(c) || c == '-' || c == '*') {
      ++i;
    } else if (line.size() - i >= 3 && line.compare(i, 3, "\xE2\x80\xA2") == 0) {
      i += 3;  // U+2022 bullet
    } else {
      break;
    }
  }
  return text::trim(line.substr(i));
}

std::string sanitize_degree_tail(std::string_view tail) {
  std::string t = text::trim(tail);
  while (!t.empty() && !text::is_token_char(static_cast<unsigned char>(t.back()))) t.pop_back();
  // Cap at five words; degree fields are short and prose tails are noise.
  std::size_t words = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == ' ' && ++words == 5) {
      t.resize(i);
      break;
    }
  }
  return text::normalize_entry(t);
}

}  // namespace

int month_index(YearMonth ym) { return ym.year * 12 + (ym.month - 1); }

Gazetteer Gazetteer::load(Kind kind, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot read gazetteer file: " + file.string());
  Gazetteer gazetteer;
  gazetteer.kind = kind;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::string entry = text::normalize_entry(t);
    if (seen.insert(entry).second) gazetteer.entries.push_back(std::move(entry));
  }
  if (gazetteer.entries.empty()) throw DataError("empty gazetteer: " + file.string());
  return gazetteer;
}

Gazetteers Gazetteers::load_dir(const std::filesystem::path& dir) {
  return Gazetteers{
      Gazetteer::load(Gazetteer::Kind::skills, dir / "skills.txt"),
      Gazetteer::load(Gazetteer::Kind::cities, dir / "cities.txt"),
      Gazetteer::load(Gazetteer::Kind::colleges, dir / "colleges.txt"),
      Gazetteer::load(Gazetteer::Kind::degrees, dir / "degrees.txt"),
  };
}

std::optional<std::string> extract_email(std::string_view doc_text) {
  static const std::regex re("[A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\\.[A-Za-z]{2,}");
  std::cmatch m;
  if (std::regex_search(doc_text.data(), doc_text.data() + doc_text.size(), m, re)) {
    return m.str();
  }
  return std::nullopt;
}

std::optional<std::string> extract_phone(std::string_view doc_text) {
  const auto is_phone_char = [](char c) {
    return is_digit(c) || c == '(' || c == ')' || c == '-' || c == '.' || c == ' ' || c == '+';
  };
  const std::size_t n = doc_text.size();
  std::size_t i = 0;
  while (i < n) {
    if (!is_phone_char(doc_text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    int digits = 0;
    while (j < n && is_phone_char(doc_text[j])) {
      if (is_digit(doc_text[j])) ++digits;
      ++j;
    }
    if (digits >= 10) {
      // Trim to the dialable core: leading digit/'('/'+', trailing digit/')'.
      std::size_t a = i;
      std::size_t b = j;
      while (a < b && !(is_digit(doc_text[a]) || doc_text[a] == '(' || doc_text[a] == '+')) ++a;
      while (b > a && !(is_digit(doc_text[b - 1]) || doc_text[b - 1] == ')')) --b;
      if (digits <= 13) return std::string(doc_text.substr(a, b - a));
      // Over-long run: take the shortest prefix reaching 10 digits, extended
      // through any directly adjacent digits, and reject numbers that keep
      // going past 13.
      int got = 0;
      std::size_t end = a;
      bool contiguous_overflow = false;
      for (std::size_t p = a; p < b && got < 13; ++p) {
        if (!is_digit(doc_text[p])) {
          if (got >= 10) break;
          continue;
        }
        ++got;
        end = p + 1;
        if (got >= 10 && (p + 1 >= b || !is_digit(doc_text[p + 1]))) break;
      }
      if (end < b && is_digit(doc_text[end])) contiguous_overflow = true;
      if (!contiguous_overflow && got >= 10 && got <= 13) {
        if (end < b && doc_text[end] == ')') ++end;
        return std::string(doc_text.substr(a, end - a));
      }
    }
    i = j;
  }
  return std::nullopt;
}

std::string extract_name(std::string_view filename, std::string_view doc_text) {
  const std::size_t dot = filename.rfind('.');
  std::string stem(dot == std::string_view::npos ? filename : filename.substr(0, dot));
  for (char& c : stem) {
    if (c == '_' || c == '-' || c == '.') c = ' ';
  }
  stem = text::normalize_entry(stem);
  if (!stem.empty()) return text::title_case(stem);
  for (const std::string& line : text::split_lines(doc_text)) {
    const std::string t = text::trim(line);
    if (!t.empty()) return t;
  }
  return "";
}

std::optional<std::string> extract_city(std::string_view doc_text, const Gazetteer& cities) {
  const auto hits = gazetteer_hits(doc_text, cities);
  if (hits.empty()) return std::nullopt;
  return text::title_case(*hits.front().second);
}

std::map<std::string, std::vector<std::string>> segment_sections(std::string_view doc_text) {
  std::map<std::string, std::vector<std::string>> sections;
  std::string current = "preamble";
  const auto& labels = header_labels();
  for (const std::string& line : text::split_lines(doc_text)) {
    const auto it = labels.find(clean_header(line));
    if (it != labels.end()) {
      current = it->second;
      sections.try_emplace(current);  // header with no body still shows up
      continue;
    }
    if (current == "preamble" && text::trim(line).empty() && !sections.contains("preamble")) {
      continue;  // leading blank lines do not create a preamble
    }
    sections[current].push_back(line);
  }
  return sections;
}

std::optional<DateRange> parse_date_range(std::string_view line, YearMonth reference) {
  std::cmatch m;
  if (!std::regex_search(line.data(), line.data() + line.size(), m, month_range_regex())) {
    return std::nullopt;
  }
  DateRange range;
  range.start = {std::stoi(m[2].str()), month_number(m[1].str())};
  if (m[5].matched) {
    range.end = reference;
  } else {
    range.end = {std::stoi(m[4].str()), month_number(m[3].str())};
  }
  if (range.end < range.start) {
    throw DataError("malformed date range (start after end): " + std::string(text::trim(line)));
  }
  return range;
}

int total_duration_months(std::vector<DateRange> ranges) {
  std::vector<std::pair<int, int>> intervals;  // half-open month intervals
  intervals.reserve(ranges.size());
  for (const DateRange& r : ranges) {
    const int a = month_index(r.start);
    const int b = month_index(r.end);
    if (a < b) intervals.emplace_back(a, b);
  }
  std::sort(intervals.begin(), intervals.end());
  int total = 0;
  int cur_start = 0;
  int cur_end = -1;
  for (const auto& [a, b] : intervals) {
    if (cur_end < 0 || a > cur_end) {
      if (cur_end >= 0) total += cur_end - cur_start;
      cur_start = a;
      cur_end = b;
    } else {
      cur_end = std::max(cur_end, b);
    }
  }
  if (cur_end >= 0) total += cur_end - cur_start;
  return total;
}

std::string format_duration(int months) {
  const int years = months / 12;
  const int rest = months % 12;
  std::ostringstream out;
  out << years << (years == 1 ? " year " : " years ") << rest
      << (rest == 1 ? " month" : " months");
  return out.str();
}

std::vector<std::string> extract_skills(std::string_view doc_text, const Gazetteer& skills) {
  std::vector<std::string> found;
  for (const auto& [pos, entry] : gazetteer_hits(doc_text, skills)) {
    found.push_back(text::title_case(*entry));
  }
  return found;
}

std::vector<std::string> extract_colleges(std::string_view doc_text, const Gazetteer& colleges) {
  std::vector<std::string> found;
  for (const auto& [pos, entry] : gazetteer_hits(doc_text, colleges)) {
    found.push_back(*entry);
  }
  return found;
}

std::vector<std::string> extract_degrees(std::string_view doc_text, const Gazetteer& degrees) {
  std::vector<std::string> found;
  std::unordered_set<std::string> seen;
  for (const std::string& line : text::split_lines(doc_text)) {
    const std::string lower = text::to_lower(line);
    std::vector<std::pair<std::size_t, const std::string*>> matches;
    for (const std::string& entry : degrees.entries) {
      const std::size_t pos = text::find_whole_word(lower, entry);
      if (pos != std::string_view::npos) matches.emplace_back(pos, &entry);
    }
    std::sort(matches.begin(), matches.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second->size() > b.second->size();
    });
    std::size_t consumed = 0;
    for (const auto& [pos, entry] : matches) {
      if (pos < consumed) continue;  // sub-pattern of an already-taken match
      consumed = pos + entry->size();
      std::string_view tail = std::string_view(lower).substr(consumed);
      const std::size_t stop = tail.find_first_of(",;()|/\xE2");
      if (stop != std::string_view::npos) tail = tail.substr(0, stop);
      const std::string field = sanitize_degree_tail(tail);
      std::string degree = field.empty() ? *entry : *entry + " " + field;
      if (seen.insert(degree).second) found.push_back(std::move(degree));
    }
  }
  return found;
}

ParsedResume parse_resume(const corpus::RawDocument& raw, const Gazetteers& gazetteers,
                          YearMonth reference) {
  ParsedResume resume;
  resume.doc_id = raw.id;
  resume.name = extract_name(raw.filename, raw.text);
  resume.email = extract_email(raw.text);
  resume.number = extract_phone(raw.text);
  resume.city = extract_city(raw.text, gazetteers.cities);
  resume.skills = extract_skills(raw.text, gazetteers.skills);
  resume.colleges = extract_colleges(raw.text, gazetteers.colleges);
  resume.degrees = extract_degrees(raw.text, gazetteers.degrees);

  auto sections = segment_sections(raw.text);
  const auto collect = [&](const char* label, std::vector<std::string>& lines_out,
                           int& duration_out) {
    const auto it = sections.find(label);
    if (it == sections.end()) return;
    std::vector<DateRange> ranges;
    for (const std::string& line : it->second) {
      const std::string cleaned = strip_bullet(line);
      if (cleaned.empty()) continue;
      lines_out.push_back(cleaned);
      if (auto range = parse_date_range(line, reference)) ranges.push_back(*range);
    }
    duration_out = total_duration_months(std::move(ranges));
  };
  collect("work", resume.work_exp, resume.work_duration_months);
  collect("education", resume.education, resume.education_duration_months);
  return resume;
}

nlohmann::ordered_json to_json(const ParsedResume& resume) {
  nlohmann::ordered_json j;
  j["name"] = resume.name;
  j["email"] = resume.email ? nlohmann::ordered_json(*resume.email) : nullptr;
  j["number"] = resume.number ? nlohmann::ordered_json(*resume.number) : nullptr;
  j["city"] = resume.city ? nlohmann::ordered_json(*resume.city) : nullptr;
  j["work_exp"] = resume.work_exp;
  j["education"] = resume.education;
  j["work_duration"] = format_duration(resume.work_duration_months);
  j["education_duration"] = format_duration(resume.education_duration_months);
  j["skills"] = text::join(resume.skills, ", ");
  if (resume.rating) {
    j["rating"] = std::round(*resume.rating * 100.0) / 100.0;
  } else {
    j["rating"] = nullptr;
  }
  return j;
}

}  // namespace resumerank::entities
