// Copyright 2026 The Polarlex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polarlex/topics.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "polarlex/embeddings.h"
#include "polarlex/error.h"
#include "polarlex/text_io.h"

namespace polarlex {

void LdaConfig::validate() const {
  if (num_topics < 2) throw ValidationError("LDA needs at least 2 topics");
  if (!(effective_alpha() > 0.0)) throw ValidationError("LDA alpha must be positive");
  if (!(beta_word > 0.0)) throw ValidationError("LDA beta must be positive");
  if (iterations < 0) throw ValidationError("LDA iterations must be >= 0");
}

std::optional<int> TopicModel::find(std::string_view word) const {
  const auto it = word_index.find(std::string(word));
  if (it == word_index.end()) return std::nullopt;
  return it->second;
}

namespace {

int sample(std::span<const double> cumulative, Rng& rng) {
  const double target = rng.uniform() * cumulative.back();
  const auto it =
      std::upper_bound(cumulative.begin(), cumulative.end(), target);
  return static_cast<int>(
      std::min<std::ptrdiff_t>(it - cumulative.begin(),
                               static_cast<std::ptrdiff_t>(cumulative.size()) - 1));
}

}  // namespace

LdaSampler::LdaSampler(std::span<const std::vector<std::string>> corpus,
                       const LdaConfig& cfg)
    : num_topics_(cfg.num_topics),
      alpha_(cfg.effective_alpha()),
      beta_(cfg.beta_word),
      seed_(cfg.seed),
      rng_(cfg.seed) {
  cfg.validate();
  if (corpus.empty()) throw ValidationError("LDA: empty corpus");
  for (const auto& doc : corpus) {
    vocabulary_.insert(vocabulary_.end(), doc.begin(), doc.end());
  }
  std::sort(vocabulary_.begin(), vocabulary_.end());
  vocabulary_.erase(std::unique(vocabulary_.begin(), vocabulary_.end()),
                    vocabulary_.end());
  if (vocabulary_.empty()) throw ValidationError("LDA: empty vocabulary");

  const std::size_t k = static_cast<std::size_t>(num_topics_);
  doc_topic_.assign(corpus.size() * k, 0);
  topic_word_.assign(k * vocabulary_.size(), 0);
  topic_totals_.assign(k, 0);
  weights_.resize(k);

  for (std::size_t d = 0; d < corpus.size(); ++d) {
    for (const std::string& token : corpus[d]) {
      const auto w = static_cast<int>(
          std::lower_bound(vocabulary_.begin(), vocabulary_.end(), token) -
          vocabulary_.begin());
      const int z = static_cast<int>(rng_.below(k));
      words_.push_back(w);
      docs_.push_back(static_cast<int>(d));
      assignments_.push_back(z);
      ++doc_topic_[d * k + static_cast<std::size_t>(z)];
      ++topic_word_[static_cast<std::size_t>(z) * vocabulary_.size() +
                    static_cast<std::size_t>(w)];
      ++topic_totals_[static_cast<std::size_t>(z)];
    }
  }
}

void LdaSampler::sweep() {
  const std::size_t k = static_cast<std::size_t>(num_topics_);
  const std::size_t v = vocabulary_.size();
  const double v_beta = static_cast<double>(v) * beta_;
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    const auto w = static_cast<std::size_t>(words_[i]);
    const auto d = static_cast<std::size_t>(docs_[i]);
    auto z = static_cast<std::size_t>(assignments_[i]);
    --doc_topic_[d * k + z];
    --topic_word_[z * v + w];
    --topic_totals_[z];

    double total = 0.0;
    for (std::size_t t = 0; t < k; ++t) {
      total += (doc_topic_[d * k + t] + alpha_) *
               (topic_word_[t * v + w] + beta_) /
               (static_cast<double>(topic_totals_[t]) + v_beta);
      weights_[t] = total;
    }
    z = static_cast<std::size_t>(sample(weights_, rng_));

    assignments_[i] = static_cast<int>(z);
    ++doc_topic_[d * k + z];
    ++topic_word_[z * v + w];
    ++topic_totals_[z];
  }
  ++sweeps_done_;
}

std::int64_t LdaSampler::assigned_total() const {
  return std::accumulate(topic_totals_.begin(), topic_totals_.end(),
                         std::int64_t{0});
}

TopicModel LdaSampler::model() const {
  TopicModel m;
  m.num_topics = num_topics_;
  m.vocabulary = vocabulary_;
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    m.word_index.emplace(vocabulary_[i], static_cast<int>(i));
  }
  const std::size_t v = vocabulary_.size();
  const double v_beta = static_cast<double>(v) * beta_;
  m.topic_word.resize(static_cast<std::size_t>(num_topics_) * v);
  for (std::size_t t = 0; t < static_cast<std::size_t>(num_topics_); ++t) {
    const double denom = static_cast<double>(topic_totals_[t]) + v_beta;
    for (std::size_t w = 0; w < v; ++w) {
      m.topic_word[t * v + w] = (topic_word_[t * v + w] + beta_) / denom;
    }
  }
  m.alpha_doc = alpha_;
  m.beta_word = beta_;
  m.seed = seed_;
  m.iterations = sweeps_done_;
  return m;
}

TopicModel fit_lda(std::span<const std::vector<std::string>> corpus,
                   const LdaConfig& cfg) {
  LdaSampler sampler(corpus, cfg);
  for (int i = 0; i < cfg.iterations; ++i) sampler.sweep();
  return sampler.model();
}

std::vector<double> infer_topics(std::span<const std::string> tokens,
                                 const TopicModel& model, int iterations,
                                 std::uint64_t seed) {
  const auto k = static_cast<std::size_t>(model.num_topics);
  std::vector<int> words;
  for (const std::string& token : tokens) {
    if (const auto w = model.find(token)) words.push_back(*w);
  }
  if (words.empty()) {
    return std::vector<double>(k, 1.0 / static_cast<double>(k));
  }

  Rng rng(seed);
  std::vector<int> topics(words.size());
  std::vector<double> counts(k, 0.0);
  for (int& z : topics) {
    z = static_cast<int>(rng.below(k));
    counts[static_cast<std::size_t>(z)] += 1.0;
  }
  std::vector<double> cumulative(k);
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      counts[static_cast<std::size_t>(topics[i])] -= 1.0;
      double total = 0.0;
      for (std::size_t t = 0; t < k; ++t) {
        total += (counts[t] + model.alpha_doc) *
                 model.phi(static_cast<int>(t), words[i]);
        cumulative[t] = total;
      }
      topics[i] = sample(cumulative, rng);
      counts[static_cast<std::size_t>(topics[i])] += 1.0;
    }
  }
  const double denom = static_cast<double>(words.size()) +
                       static_cast<double>(k) * model.alpha_doc;
  std::vector<double> theta(k);
  for (std::size_t t = 0; t < k; ++t) {
    theta[t] = (counts[t] + model.alpha_doc) / denom;
  }
  return theta;
}

double topic_similarity(std::span<const std::string> question_tokens,
                        std::span<const std::string> answer_tokens,
                        const TopicModel& model, int iterations,
                        std::uint64_t seed) {
  return cosine(infer_topics(question_tokens, model, iterations, seed),
                infer_topics(answer_tokens, model, iterations, seed));
}

void save_topic_model(std::ostream& out, const TopicModel& model) {
  out << "#lda\tK=" << model.num_topics << "\tV=" << model.vocab_size()
      << "\talpha=" << format_double(model.alpha_doc)
      << "\tbeta=" << format_double(model.beta_word) << "\tseed=" << model.seed
      << "\titerations=" << model.iterations << '\n';
  out << "#vocab";
  for (const std::string& word : model.vocabulary) out << '\t' << word;
  out << '\n';
  const std::size_t v = model.vocab_size();
  for (int t = 0; t < model.num_topics; ++t) {
    for (std::size_t w = 0; w < v; ++w) {
      if (w) out << '\t';
      out << format_double(model.topic_word[static_cast<std::size_t>(t) * v + w]);
    }
    out << '\n';
  }
}

void save_topic_model(const std::filesystem::path& path,
                      const TopicModel& model) {
  std::ofstream out = open_output(path);
  save_topic_model(out, model);
}

TopicModel load_topic_model(std::istream& in, const std::string& source) {
  TopicModel model;
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::string_view {
    if (!std::getline(in, line)) {
      throw ParseError(source + ": truncated topic model after line " +
                       std::to_string(line_no));
    }
    ++line_no;
    return chomp(line);
  };

  {
    const auto fields = split(next_line(), '\t');
    const std::string context = where(source, line_no);
    if (fields.size() != 7 || fields[0] != "#lda") {
      throw ParseError(context + ": expected the '#lda' header");
    }
    auto value = [&](std::size_t i, std::string_view key) {
      if (!fields[i].starts_with(key)) {
        throw ParseError(context + ": expected field " + std::string(key));
      }
      return fields[i].substr(key.size());
    };
    model.num_topics = static_cast<int>(parse_int(value(1, "K="), context));
    const auto v = static_cast<std::size_t>(parse_int(value(2, "V="), context));
    model.alpha_doc = parse_double(value(3, "alpha="), context);
    model.beta_word = parse_double(value(4, "beta="), context);
    model.seed = static_cast<std::uint64_t>(parse_int(value(5, "seed="), context));
    model.iterations = static_cast<int>(parse_int(value(6, "iterations="), context));

    const auto vocab = split(next_line(), '\t');
    if (vocab.empty() || vocab[0] != "#vocab" || vocab.size() != v + 1) {
      throw ParseError(where(source, line_no) + ": expected " +
                       std::to_string(v) + " vocabulary entries");
    }
    for (std::size_t i = 1; i < vocab.size(); ++i) {
      model.vocabulary.emplace_back(vocab[i]);
      model.word_index.emplace(model.vocabulary.back(), static_cast<int>(i - 1));
    }
  }
  if (model.num_topics < 1) throw ParseError(source + ": K must be positive");
  const std::size_t v = model.vocab_size();
  model.topic_word.reserve(static_cast<std::size_t>(model.num_topics) * v);
  for (int t = 0; t < model.num_topics; ++t) {
    const auto fields = split(next_line(), '\t');
    const std::string context = where(source, line_no);
    if (fields.size() != v) {
      throw ParseError(context + ": topic row has " +
                       std::to_string(fields.size()) + " values, expected " +
                       std::to_string(v));
    }
    for (const auto field : fields) {
      model.topic_word.push_back(parse_double(field, context));
    }
  }
  return model;
}

TopicModel load_topic_model(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_topic_model(in, path.string());
}

}  // namespace polarlex
