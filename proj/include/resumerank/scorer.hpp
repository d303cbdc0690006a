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

#ifndef RESUMERANK_SCORER_HPP_
#define RESUMERANK_SCORER_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include "resumerank/entities.hpp"
#include "resumerank/lda.hpp"

namespace resumerank::scorer {

struct DomainProfile {
  std::string name;
  std::unordered_set<std::string> keywords;  // normalized lowercase

  // JSON {"name": ..., "keywords": [...]}.
  static DomainProfile load(const std::filesystem::path& file);
};

struct CorpusStats {
  double mean = 0.0;
  double sd = 0.0;  // population standard deviation
  std::size_t corpus_size = 0;

  // JSON {"mean": ..., "sd": ..., "corpus_size": ...}.
  static CorpusStats load(const std::filesystem::path& file);
  void save(const std::filesystem::path& file) const;
};

struct ScoreBreakdown {
  double km = 0.0;           // keyword match, in [0,1]
  double wm = 0.0;           // within match, in [0,1]
  double final_score = 0.0;  // km * wm
  double diff = 0.0;         // (final_score - mean) / sd
  double rating = 0.0;       // min(10, max(0, 5 + diff))
};

// |{keyword terms} ∩ profile| / |keyword list|. Throws DataError on an empty
// keyword list.
double keyword_match(const std::vector<lda::KeywordEntry>& doc_keywords,
                     const DomainProfile& profile);

// Density of matched-keyword occurrences over the token stream; 0 for an
// empty stream or empty matched set.
double within_match(const std::vector<std::string>& doc_tokens,
                    const std::unordered_set<std::string>& matched);

double final_score(double km, double wm);

// Arithmetic mean and population standard deviation. Throws DataError on
// fewer than two scores; sd = 0 is reported, not raised.
CorpusStats corpus_stats(const std::vector<double>& scores);

// min(10, max(0, 5 + (final_score - mean) / sd)). Throws DataError when
// sd <= 0.
double rating(double final_score, const CorpusStats& stats);

struct MatchScores {
  double km = 0.0;
  double wm = 0.0;
  double final_score = 0.0;
  std::unordered_set<std::string> matched;  // keyword terms found in the profile
};

MatchScores match_scores(const std::vector<std::string>& doc_tokens,
                         const std::vector<lda::KeywordEntry>& doc_keywords,
                         const DomainProfile& profile);

// Full pipeline for one document given its keywords. When zero_sd_neutral is
// set, sd = 0 yields diff 0 / rating 5 instead of an error.
ScoreBreakdown score_document(const std::vector<std::string>& doc_tokens,
                              const std::vector<lda::KeywordEntry>& doc_keywords,
                              const DomainProfile& profile, const CorpusStats& stats,
                              bool zero_sd_neutral = false);

// top_keywords -> keyword_match -> within_match -> final_score -> rating.
// Uses the stored document-topic row when parsed.doc_id is a training
// document, fold-in inference otherwise. Sets parsed.rating rounded to two
// decimals and returns the full-precision breakdown.
ScoreBreakdown rate_resume(entities::ParsedResume& parsed, const lda::LdaModel& model,
                           const std::vector<std::string>& doc_tokens,
                           const DomainProfile& profile, const CorpusStats& stats, int n = 30,
                           bool zero_sd_neutral = false);

double round2(double value);

}  // namespace resumerank::scorer

#endif  // RESUMERANK_SCORER_HPP_
