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

#include "resumerank/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "resumerank/errors.hpp"
#include "resumerank/text.hpp"

namespace resumerank::scorer {

DomainProfile DomainProfile::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot read profile file: " + file.string());
  nlohmann::json j;
  try {
    in >> j;
    DomainProfile profile;
    profile.name = j.at("name").get<std::string>();
    for (const auto& kw : j.at("keywords")) {
      profile.keywords.insert(text::normalize_entry(kw.get<std::string>()));
    }
    if (profile.keywords.empty()) throw DataError("profile has no keywords: " + file.string());
    return profile;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("malformed profile file " + file.string() + ": " + e.what());
  }
}

CorpusStats CorpusStats::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot read stats file: " + file.string());
  nlohmann::json j;
  try {
    in >> j;
    CorpusStats stats;
    stats.mean = j.at("mean").get<double>();
    stats.sd = j.at("sd").get<double>();
    stats.corpus_size = j.value("corpus_size", std::size_t{0});
    if (stats.sd < 0) throw DataError("stats file has negative sd: " + file.string());
    return stats;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("malformed stats file " + file.string() + ": " + e.what());
  }
}

void CorpusStats::save(const std::filesystem::path& file) const {
  nlohmann::ordered_json j;
  j["mean"] = mean;
  j["sd"] = sd;
  j["corpus_size"] = corpus_size;
  std::ofstream out(file, std::ios::binary);
  if (!out) throw DataError("cannot write stats file: " + file.string());
  out << j.dump(2) << "\n";
}

double keyword_match(const std::vector<lda::KeywordEntry>& doc_keywords,
                     const DomainProfile& profile) {
  if (doc_keywords.empty()) throw DataError("scorer: empty keyword list");
  std::size_t matched = 0;
  for (const auto& entry : doc_keywords) {
    if (profile.keywords.contains(entry.term)) ++matched;
  }
  return static_cast<double>(matched) / static_cast<double>(doc_keywords.size());
}

double within_match(const std::vector<std::string>& doc_tokens,
                    const std::unordered_set<std::string>& matched) {
  if (doc_tokens.empty() || matched.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& token : doc_tokens) {
    if (matched.contains(token)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(doc_tokens.size());
}

double final_score(double km, double wm) { return km * wm; }

CorpusStats corpus_stats(const std::vector<double>& scores) {
  if (scores.size() < 2) {
    throw DataError("scorer: need at least two scores for corpus statistics");
  }
  CorpusStats stats;
  stats.corpus_size = scores.size();
  double sum = 0.0;
  for (double x : scores) sum += x;
  stats.mean = sum / static_cast<double>(scores.size());
  double ss = 0.0;
  for (double x : scores) ss += (x - stats.mean) * (x - stats.mean);
  stats.sd = std::sqrt(ss / static_cast<double>(scores.size()));  // population sd
  return stats;
}

double rating(double final_score, const CorpusStats& stats) {
  if (!(stats.sd > 0.0)) {
    throw DataError("scorer: zero standard deviation, rating is undefined");
  }
  const double diff = (final_score - stats.mean) / stats.sd;
  return std::min(10.0, std::max(0.0, 5.0 + diff));
}

MatchScores match_scores(const std::vector<std::string>& doc_tokens,
                         const std::vector<lda::KeywordEntry>& doc_keywords,
                         const DomainProfile& profile) {
  MatchScores scores;
  scores.km = keyword_match(doc_keywords, profile);
  for (const auto& entry : doc_keywords) {
    if (profile.keywords.contains(entry.term)) scores.matched.insert(entry.term);
  }
  scores.wm = within_match(doc_tokens, scores.matched);
  scores.final_score = final_score(scores.km, scores.wm);
  return scores;
}

ScoreBreakdown score_document(const std::vector<std::string>& doc_tokens,
                              const std::vector<lda::KeywordEntry>& doc_keywords,
                              const DomainProfile& profile, const CorpusStats& stats,
                              bool zero_sd_neutral) {
  const MatchScores ms = match_scores(doc_tokens, doc_keywords, profile);
  ScoreBreakdown breakdown;
  breakdown.km = ms.km;
  breakdown.wm = ms.wm;
  breakdown.final_score = ms.final_score;
  if (!(stats.sd > 0.0) && zero_sd_neutral) {
    breakdown.diff = 0.0;
    breakdown.rating = 5.0;
  } else {
    breakdown.rating = rating(ms.final_score, stats);
    breakdown.diff = (ms.final_score - stats.mean) / stats.sd;
  }
  return breakdown;
}

ScoreBreakdown rate_resume(entities::ParsedResume& parsed, const lda::LdaModel& model,
                           const std::vector<std::string>& doc_tokens,
                           const DomainProfile& profile, const CorpusStats& stats, int n,
                           bool zero_sd_neutral) {
  std::vector<lda::KeywordEntry> keywords;
  const int d = model.doc_index(parsed.doc_id);
  if (d >= 0) {
    keywords = lda::top_keywords(model, d, n);
  } else {
    const auto vocab = corpus::Vocabulary::from_terms(model.vocabulary);
    const std::vector<int> bow = corpus::to_bow(doc_tokens, vocab);
    // Fold-in sweeps for unseen documents; seeded off the model so reruns
    // reproduce the rating.
    const auto theta = lda::infer_unseen(model, bow, 100, model.config.seed);
    keywords = lda::top_keywords(model, theta, n);
  }
  const ScoreBreakdown breakdown =
      score_document(doc_tokens, keywords, profile, stats, zero_sd_neutral);
  parsed.rating = round2(breakdown.rating);
  return breakdown;
}

double round2(double value) { return std::round(value * 100.0) / 100.0; }

}  // namespace resumerank::scorer
