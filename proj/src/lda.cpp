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

#include "resumerank/lda.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "resumerank/errors.hpp"

namespace resumerank::lda {

namespace {

// 53-bit uniform draw in [0, 1); independent of std::uniform_real_distribution
// so sampling is bit-stable across standard libraries.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_topic(std::mt19937_64& rng, int K) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(K));
}

void conditional_into(const SamplerState& s, int d, int w, std::vector<double>& p) {
  double sum = 0.0;
  const double v_eta = static_cast<double>(s.V) * s.eta;
  const auto& doc_counts = s.doc_topic_counts[static_cast<std::size_t>(d)];
  for (int k = 0; k < s.K; ++k) {
    const double val = (doc_counts[static_cast<std::size_t>(k)] + s.alpha) *
                       (s.topic_word_counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(w)] + s.eta) /
                       (static_cast<double>(s.topic_totals[static_cast<std::size_t>(k)]) + v_eta);
    p[static_cast<std::size_t>(k)] = val;
    sum += val;
  }
  for (double& x : p) x /= sum;
}

int sample_from(const std::vector<double>& p, double u) {
  double cum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    cum += p[k];
    if (u < cum) return static_cast<int>(k);
  }
  return static_cast<int>(p.size()) - 1;  // guard against rounding at the tail
}

void validate_row(const std::vector<double>& row, const char* what) {
  double sum = 0.0;
  for (double x : row) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw DataError(std::string("model file has an invalid probability in ") + what);
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "model file has a " << what << " row summing to " << sum << ", expected 1";
    throw DataError(msg.str());
  }
}

}  // namespace

LdaConfig LdaConfig::with_defaults(int K) {
  LdaConfig config;
  config.K = K;
  config.alpha = 50.0 / static_cast<double>(K);
  config.eta = 0.01;
  config.iterations = 1000;
  return config;
}

void LdaConfig::validate() const {
  if (K < 1) throw std::invalid_argument("lda: K must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("lda: alpha must be > 0");
  if (!(eta > 0.0)) throw std::invalid_argument("lda: eta must be > 0");
  if (iterations < 1) throw std::invalid_argument("lda: iterations must be >= 1");
}

std::vector<double> gibbs_conditional(const SamplerState& state, int d, int w) {
  std::vector<double> p(static_cast<std::size_t>(state.K));
  conditional_into(state, d, w, p);
  return p;
}

int LdaModel::doc_index(std::string_view id) const {
  for (std::size_t i = 0; i < doc_ids.size(); ++i) {
    if (doc_ids[i] == id) return static_cast<int>(i);
  }
  return -1;
}

LdaModel train(const std::vector<std::vector<int>>& docs, const LdaConfig& config,
               std::vector<std::string> vocabulary, std::vector<std::string> doc_ids) {
  config.validate();
  const int V = static_cast<int>(vocabulary.size());
  const int D = static_cast<int>(docs.size());
  const int K = config.K;
  if (D == 0) throw DataError("lda: cannot train on an empty corpus");
  if (V == 0) throw DataError("lda: degenerate vocabulary (V = 0)");
  std::size_t total_tokens = 0;
  for (const auto& doc : docs) {
    total_tokens += doc.size();
    for (int w : doc) {
      if (w < 0 || w >= V) throw DataError("lda: word index out of vocabulary range");
    }
  }
  if (total_tokens == 0) throw DataError("lda: corpus has no in-vocabulary tokens");
  if (!doc_ids.empty() && static_cast<int>(doc_ids.size()) != D) {
    throw DataError("lda: doc_ids length does not match corpus size");
  }

  LdaModel model;
  model.config = config;
  model.vocabulary = std::move(vocabulary);
  model.doc_ids = std::move(doc_ids);

  SamplerState& s = model.counts;
  s.K = K;
  s.V = V;
  s.alpha = config.alpha;
  s.eta = config.eta;
  s.doc_topic_counts.assign(static_cast<std::size_t>(D), std::vector<int>(static_cast<std::size_t>(K), 0));
  s.topic_word_counts.assign(static_cast<std::size_t>(K), std::vector<int>(static_cast<std::size_t>(V), 0));
  s.topic_totals.assign(static_cast<std::size_t>(K), 0);

  model.assignments.resize(static_cast<std::size_t>(D));
  std::mt19937_64 rng(config.seed);

  for (int d = 0; d < D; ++d) {
    const auto& doc = docs[static_cast<std::size_t>(d)];
    auto& z_doc = model.assignments[static_cast<std::size_t>(d)];
    z_doc.resize(doc.size());
    for (std::size_t n = 0; n < doc.size(); ++n) {
      const int w = doc[n];
      const int z = uniform_topic(rng, K);
      z_doc[n] = z;
      ++s.doc_topic_counts[static_cast<std::size_t>(d)][static_cast<std::size_t>(z)];
      ++s.topic_word_counts[static_cast<std::size_t>(z)][static_cast<std::size_t>(w)];
      ++s.topic_totals[static_cast<std::size_t>(z)];
    }
  }

  std::vector<double> p(static_cast<std::size_t>(K));
  for (int iter = 0; iter < config.iterations; ++iter) {
    for (int d = 0; d < D; ++d) {
      const auto& doc = docs[static_cast<std::size_t>(d)];
      auto& z_doc = model.assignments[static_cast<std::size_t>(d)];
      for (std::size_t n = 0; n < doc.size(); ++n) {
        const int w = doc[n];
        const int old_z = z_doc[n];
        --s.doc_topic_counts[static_cast<std::size_t>(d)][static_cast<std::size_t>(old_z)];
        --s.topic_word_counts[static_cast<std::size_t>(old_z)][static_cast<std::size_t>(w)];
        --s.topic_totals[static_cast<std::size_t>(old_z)];

        conditional_into(s, d, w, p);
        const int new_z = sample_from(p, next_unit(rng));

        z_doc[n] = new_z;
        ++s.doc_topic_counts[static_cast<std::size_t>(d)][static_cast<std::size_t>(new_z)];
        ++s.topic_word_counts[static_cast<std::size_t>(new_z)][static_cast<std::size_t>(w)];
        ++s.topic_totals[static_cast<std::size_t>(new_z)];
      }
    }
  }

  const double v_eta = static_cast<double>(V) * config.eta;
  model.topic_word.assign(static_cast<std::size_t>(K), std::vector<double>(static_cast<std::size_t>(V), 0.0));
  for (int k = 0; k < K; ++k) {
    const double denom = static_cast<double>(s.topic_totals[static_cast<std::size_t>(k)]) + v_eta;
    for (int w = 0; w < V; ++w) {
      model.topic_word[static_cast<std::size_t>(k)][static_cast<std::size_t>(w)] =
          (s.topic_word_counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(w)] + config.eta) / denom;
    }
  }
  const double k_alpha = static_cast<double>(K) * config.alpha;
  model.doc_topic.assign(static_cast<std::size_t>(D), std::vector<double>(static_cast<std::size_t>(K), 0.0));
  for (int d = 0; d < D; ++d) {
    const double denom = static_cast<double>(docs[static_cast<std::size_t>(d)].size()) + k_alpha;
    for (int k = 0; k < K; ++k) {
      model.doc_topic[static_cast<std::size_t>(d)][static_cast<std::size_t>(k)] =
          (s.doc_topic_counts[static_cast<std::size_t>(d)][static_cast<std::size_t>(k)] + config.alpha) / denom;
    }
  }
  return model;
}

const std::vector<double>& doc_topics(const LdaModel& model, int d) {
  if (d < 0 || d >= model.num_docs()) {
    throw DataError("lda: document index out of range");
  }
  return model.doc_topic[static_cast<std::size_t>(d)];
}

std::vector<double> term_mixture(const LdaModel& model, const std::vector<double>& theta) {
  const int V = model.vocab_size();
  const int K = model.num_topics();
  if (static_cast<int>(theta.size()) != K) {
    throw DataError("lda: topic vector length does not match the model");
  }
  std::vector<double> mix(static_cast<std::size_t>(V), 0.0);
  for (int k = 0; k < K; ++k) {
    const double weight = theta[static_cast<std::size_t>(k)];
    const auto& row = model.topic_word[static_cast<std::size_t>(k)];
    for (int w = 0; w < V; ++w) {
      mix[static_cast<std::size_t>(w)] += weight * row[static_cast<std::size_t>(w)];
    }
  }
  return mix;
}

std::vector<KeywordEntry> top_keywords(const LdaModel& model, int d, int n) {
  return top_keywords(model, doc_topics(model, d), n);
}

std::vector<KeywordEntry> top_keywords(const LdaModel& model, const std::vector<double>& theta,
                                       int n) {
  if (n < 1) throw std::invalid_argument("lda: keyword count must be >= 1");
  const std::vector<double> mix = term_mixture(model, theta);
  std::vector<int> order(mix.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double pa = mix[static_cast<std::size_t>(a)];
    const double pb = mix[static_cast<std::size_t>(b)];
    if (pa != pb) return pa > pb;
    return a < b;  // ties by vocabulary index
  });
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(n), order.size());
  std::vector<KeywordEntry> keywords;
  keywords.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int w = order[i];
    keywords.push_back({model.vocabulary[static_cast<std::size_t>(w)],
                        mix[static_cast<std::size_t>(w)], w});
  }
  return keywords;
}

std::vector<double> infer_unseen(const LdaModel& model, const std::vector<int>& doc,
                                 int iterations, std::uint64_t seed) {
  if (iterations < 1) throw std::invalid_argument("lda: iterations must be >= 1");
  if (doc.empty()) {
    throw DataError("lda: document has no in-vocabulary tokens, cannot infer topics");
  }
  const int K = model.num_topics();
  const int V = model.vocab_size();
  for (int w : doc) {
    if (w < 0 || w >= V) throw DataError("lda: word index out of vocabulary range");
  }

  std::mt19937_64 rng(seed);
  std::vector<int> z(doc.size());
  std::vector<int> counts(static_cast<std::size_t>(K), 0);
  for (std::size_t n = 0; n < doc.size(); ++n) {
    z[n] = uniform_topic(rng, K);
    ++counts[static_cast<std::size_t>(z[n])];
  }

  std::vector<double> p(static_cast<std::size_t>(K));
  for (int iter = 0; iter < iterations; ++iter) {
    for (std::size_t n = 0; n < doc.size(); ++n) {
      const int w = doc[n];
      --counts[static_cast<std::size_t>(z[n])];
      double sum = 0.0;
      for (int k = 0; k < K; ++k) {
        const double val = (counts[static_cast<std::size_t>(k)] + model.config.alpha) *
                           model.topic_word[static_cast<std::size_t>(k)][static_cast<std::size_t>(w)];
        p[static_cast<std::size_t>(k)] = val;
        sum += val;
      }
      for (double& x : p) x /= sum;
      const int new_z = sample_from(p, next_unit(rng));
      z[n] = new_z;
      ++counts[static_cast<std::size_t>(new_z)];
    }
  }

  const double denom = static_cast<double>(doc.size()) + static_cast<double>(K) * model.config.alpha;
  std::vector<double> theta(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    theta[static_cast<std::size_t>(k)] = (counts[static_cast<std::size_t>(k)] + model.config.alpha) / denom;
  }
  return theta;
}

void save_model(const LdaModel& model, const std::filesystem::path& file) {
  nlohmann::ordered_json j;
  j["config"] = {{"K", model.config.K},
                 {"alpha", model.config.alpha},
                 {"eta", model.config.eta},
                 {"iterations", model.config.iterations},
                 {"seed", model.config.seed}};
  j["vocabulary"] = model.vocabulary;
  j["doc_ids"] = model.doc_ids;
  j["topic_word"] = model.topic_word;
  j["doc_topic"] = model.doc_topic;
  std::ofstream out(file, std::ios::binary);
  if (!out) throw DataError("cannot write model file: " + file.string());
  out << j.dump(2) << "\n";
  if (!out) throw DataError("failed writing model file: " + file.string());
}

LdaModel load_model(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot read model file: " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("malformed model file " + file.string() + ": " + e.what());
  }

  LdaModel model;
  try {
    const auto& c = j.at("config");
    model.config.K = c.at("K").get<int>();
    model.config.alpha = c.at("alpha").get<double>();
    model.config.eta = c.at("eta").get<double>();
    model.config.iterations = c.at("iterations").get<int>();
    model.config.seed = c.at("seed").get<std::uint64_t>();
    model.vocabulary = j.at("vocabulary").get<std::vector<std::string>>();
    model.doc_ids = j.at("doc_ids").get<std::vector<std::string>>();
    model.topic_word = j.at("topic_word").get<std::vector<std::vector<double>>>();
    model.doc_topic = j.at("doc_topic").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError("malformed model file " + file.string() + ": " + e.what());
  }

  try {
    model.config.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError("model file " + file.string() + " has an invalid config: " + e.what());
  }
  const std::size_t K = static_cast<std::size_t>(model.config.K);
  const std::size_t V = model.vocabulary.size();
  if (model.topic_word.size() != K) throw DataError("model file topic_word row count != K");
  for (const auto& row : model.topic_word) {
    if (row.size() != V) throw DataError("model file topic_word row width != vocabulary size");
    validate_row(row, "topic_word");
  }
  if (!model.doc_ids.empty() && model.doc_ids.size() != model.doc_topic.size()) {
    throw DataError("model file doc_ids length != doc_topic row count");
  }
  for (const auto& row : model.doc_topic) {
    if (row.size() != K) throw DataError("model file doc_topic row width != K");
    validate_row(row, "doc_topic");
  }
  return model;
}

}  // namespace resumerank::lda
