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

#include "resumerank/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "resumerank/errors.hpp"
#include "resumerank/stopwords_data.hpp"
#include "resumerank/text.hpp"

namespace resumerank::corpus {

namespace {

// Alphanumeric for stripping purposes: ASCII alnum plus non-ASCII code
// points other than spaces and the general-punctuation block, so accented
// names survive while bullets, dashes and ellipses strip off token edges.
bool is_word_cp(std::uint32_t cp) {
  if (cp < 0x80) return std::isalnum(static_cast<int>(cp)) != 0;
  if (cp >= 0x2000 && cp <= 0x206F) return false;
  return !text::is_unicode_space(cp);
}

bool keeps_trailing(std::uint32_t cp) { return is_word_cp(cp) || cp == '+' || cp == '#'; }

StopwordSet parse_stopword_text(std::string_view content) {
  StopwordSet words;
  for (const std::string& line : text::split_lines(content)) {
    const std::string t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    words.insert(text::to_lower(t));
  }
  return words;
}

}  // namespace

const StopwordSet& default_stopwords() {
  static const StopwordSet words = parse_stopword_text(detail::kDefaultStopwordsText);
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot read stopword file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_stopword_text(buf.str());
}

std::vector<std::string> tokenize(std::string_view doc_text, const StopwordSet& stopwords) {
  struct Cp {
    std::uint32_t cp;
    std::size_t offset;
    std::size_t width;
  };

  std::vector<std::string> tokens;
  std::vector<Cp> word;

  const auto flush = [&] {
    if (word.empty()) return;
    std::size_t first = 0;
    std::size_t last = word.size();
    while (first < last && !is_word_cp(word[first].cp)) ++first;
    while (last > first && !keeps_trailing(word[last - 1].cp)) --last;
    if (first < last) {
      const std::size_t begin = word[first].offset;
      const std::size_t end = word[last - 1].offset + word[last - 1].width;
      std::string token = text::to_lower(doc_text.substr(begin, end - begin));
      if (!stopwords.contains(token)) tokens.push_back(std::move(token));
    }
    word.clear();
  };

  std::size_t i = 0;
  while (i < doc_text.size()) {
    const std::size_t offset = i;
    const std::uint32_t cp = text::decode_utf8(doc_text, i);
    if (text::is_unicode_space(cp)) {
      flush();
    } else {
      word.push_back({cp, offset, i - offset});
    }
  }
  flush();
  return tokens;
}

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& docs, int min_count) {
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
  std::unordered_map<std::string, int> counts;
  std::vector<std::string> order;  // first-occurrence order
  for (const auto& doc : docs) {
    for (const auto& token : doc) {
      auto [it, inserted] = counts.try_emplace(token, 0);
      if (inserted) order.push_back(token);
      ++it->second;
    }
  }
  Vocabulary vocab;
  for (auto& term : order) {
    if (counts[term] >= min_count) {
      vocab.index_.emplace(term, static_cast<int>(vocab.terms_.size()));
      vocab.terms_.push_back(std::move(term));
    }
  }
  return vocab;
}

Vocabulary Vocabulary::from_terms(std::vector<std::string> terms) {
  Vocabulary vocab;
  vocab.terms_ = std::move(terms);
  for (std::size_t i = 0; i < vocab.terms_.size(); ++i) {
    auto [it, inserted] = vocab.index_.emplace(vocab.terms_[i], static_cast<int>(i));
    if (!inserted) throw DataError("duplicate vocabulary term: " + vocab.terms_[i]);
  }
  return vocab;
}

int Vocabulary::index_of(std::string_view term) const {
  auto it = index_.find(std::string(term));
  return it == index_.end() ? -1 : it->second;
}

const std::string& Vocabulary::term(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("vocabulary index out of range");
  return terms_[static_cast<std::size_t>(index)];
}

std::vector<int> to_bow(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
  std::vector<int> bow;
  bow.reserve(tokens.size());
  for (const auto& token : tokens) {
    const int idx = vocab.index_of(token);
    if (idx >= 0) bow.push_back(idx);
  }
  return bow;
}

std::vector<RawDocument> load_corpus_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw DataError("corpus directory not found: " + dir.string());
  }
  std::vector<RawDocument> docs;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    if (!in) throw DataError("cannot read document: " + entry.path().string());
    std::ostringstream buf;
    buf << in.rdbuf();
    docs.push_back({entry.path().stem().string(), entry.path().filename().string(), buf.str()});
  }
  if (docs.empty()) throw DataError("no .txt documents in corpus directory: " + dir.string());
  std::sort(docs.begin(), docs.end(),
            [](const RawDocument& a, const RawDocument& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < docs.size(); ++i) {
    if (docs[i].id == docs[i - 1].id) throw DataError("duplicate document id: " + docs[i].id);
  }
  return docs;
}

}  // namespace resumerank::corpus
