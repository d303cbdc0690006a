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

#ifndef RESUMERANK_LDA_HPP_
#define RESUMERANK_LDA_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace resumerank::lda {

struct LdaConfig {
  int K = 10;             // topic count
  double alpha = 5.0;     // symmetric document-topic prior
  double eta = 0.01;      // symmetric topic-word prior
  int iterations = 1000;  // full Gibbs sweeps
  std::uint64_t seed = 42;

  // alpha = 50/K, eta = 0.01, iterations = 1000.
  static LdaConfig with_defaults(int K);

  // Throws std::invalid_argument on K < 1, alpha <= 0, eta <= 0,
  // iterations < 1.
  void validate() const;
};

// Count state the collapsed Gibbs kernel conditions on. Callers must have
// decremented the word being resampled from all three count structures.
struct SamplerState {
  int K = 0;
  int V = 0;
  double alpha = 0.0;
  double eta = 0.0;
  std::vector<std::vector<int>> doc_topic_counts;   // D x K
  std::vector<std::vector<int>> topic_word_counts;  // K x V
  std::vector<long long> topic_totals;              // K, = row sums above
};

// p(z = k | rest) proportional to
//   (n_dk + alpha) * (n_kw + eta) / (n_k + V * eta),
// returned normalized over the K topics.
std::vector<double> gibbs_conditional(const SamplerState& state, int d, int w);

struct KeywordEntry {
  std::string term;
  double probability;
  int term_index;
};

struct LdaModel {
  LdaConfig config;
  std::vector<std::string> vocabulary;          // V terms
  std::vector<std::string> doc_ids;             // D ids
  std::vector<std::vector<double>> topic_word;  // K x V rows summing to 1
  std::vector<std::vector<double>> doc_topic;   // D x K rows summing to 1
  std::vector<std::vector<int>> assignments;    // per-position topics (training only)
  SamplerState counts;                          // final counts (training only)

  int num_topics() const { return config.K; }
  int vocab_size() const { return static_cast<int>(vocabulary.size()); }
  int num_docs() const { return static_cast<int>(doc_topic.size()); }
  int doc_index(std::string_view id) const;  // -1 when unknown
};

// Collapsed Gibbs training: seeded uniform initialization, `iterations` full
// sweeps in document/position order, single final sample. Deterministic for
// a given (docs, config).
LdaModel train(const std::vector<std::vector<int>>& docs, const LdaConfig& config,
               std::vector<std::string> vocabulary, std::vector<std::string> doc_ids = {});

const std::vector<double>& doc_topics(const LdaModel& model, int d);

// P(term | d) = sum_k theta[k] * phi[k][term] for the whole vocabulary.
std::vector<double> term_mixture(const LdaModel& model, const std::vector<double>& theta);

// Top n terms of the document's term mixture, descending probability, ties
// broken by vocabulary index.
std::vector<KeywordEntry> top_keywords(const LdaModel& model, int d, int n);
std::vector<KeywordEntry> top_keywords(const LdaModel& model, const std::vector<double>& theta,
                                       int n);

// Fold-in: resamples topic assignments for an unseen document against the
// trained topic-word rows, which stay fixed. Throws DataError when the
// document has no in-vocabulary tokens.
std::vector<double> infer_unseen(const LdaModel& model, const std::vector<int>& doc,
                                 int iterations, std::uint64_t seed);

// Single JSON document {config, vocabulary, doc_ids, topic_word, doc_topic}.
// Loading validates dimensions and row sums.
void save_model(const LdaModel& model, const std::filesystem::path& file);
LdaModel load_model(const std::filesystem::path& file);

}  // namespace resumerank::lda

#endif  // RESUMERANK_LDA_HPP_
