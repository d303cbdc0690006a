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

#ifndef RESUMERANK_CORPUS_HPP_
#define RESUMERANK_CORPUS_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace resumerank::corpus {

struct RawDocument {
  std::string id;        // unique within a corpus; filename stem by convention
  std::string filename;  // original file name
  std::string text;      // full UTF-8 text; may be empty
};

struct TokenizedDocument {
  std::string id;
  std::vector<std::string> tokens;
};

using StopwordSet = std::unordered_set<std::string>;

// Built-in English list; data/stopwords_en.txt ships the same words.
const StopwordSet& default_stopwords();

// One lowercase token per line; '#' starts a comment; blank lines ignored.
StopwordSet load_stopwords(const std::filesystem::path& file);

// Lowercases, splits on Unicode whitespace, strips leading/trailing
// non-alphanumeric characters while keeping interior and trailing '+'/'#'
// ("c++", "c#"), then drops stopwords. Order preserved.
std::vector<std::string> tokenize(std::string_view doc_text, const StopwordSet& stopwords);

class Vocabulary {
 public:
  Vocabulary() = default;

  // Keeps terms whose total corpus frequency >= min_count, ordered by first
  // occurrence across the documents as given.
  static Vocabulary build(const std::vector<std::vector<std::string>>& docs, int min_count = 1);

  // Rebuilds the index for a term list loaded from a persisted model.
  static Vocabulary from_terms(std::vector<std::string> terms);

  int index_of(std::string_view term) const;  // -1 when absent
  const std::string& term(int index) const;
  const std::vector<std::string>& terms() const { return terms_; }
  int size() const { return static_cast<int>(terms_.size()); }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, int> index_;
};

// Maps in-vocabulary tokens to indices, silently dropping the rest.
std::vector<int> to_bow(const std::vector<std::string>& tokens, const Vocabulary& vocab);

// Reads every .txt file in dir; id = filename stem; result sorted by id.
std::vector<RawDocument> load_corpus_dir(const std::filesystem::path& dir);

}  // namespace resumerank::corpus

#endif  // RESUMERANK_CORPUS_HPP_
