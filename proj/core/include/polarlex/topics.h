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

#ifndef POLARLEX_TOPICS_H_
#define POLARLEX_TOPICS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polarlex/random.h"

namespace polarlex {

struct LdaConfig {
  int num_topics = 100;
  std::optional<double> alpha_doc;  // defaults to 50 / num_topics
  double beta_word = 0.01;
  int iterations = 500;
  std::uint64_t seed = 1;

  double effective_alpha() const {
    return alpha_doc.value_or(50.0 / static_cast<double>(num_topics));
  }
  void validate() const;
};

struct TopicModel {
  int num_topics = 0;
  std::vector<std::string> vocabulary;  // sorted
  std::unordered_map<std::string, int> word_index;
  // num_topics x vocabulary.size(), row-major; each row sums to 1.
  std::vector<double> topic_word;
  double alpha_doc = 0.0;
  double beta_word = 0.0;
  std::uint64_t seed = 0;
  int iterations = 0;

  std::size_t vocab_size() const { return vocabulary.size(); }
  double phi(int topic, int word) const {
    return topic_word[static_cast<std::size_t>(topic) * vocabulary.size() +
                      static_cast<std::size_t>(word)];
  }
  std::optional<int> find(std::string_view word) const;

  friend bool operator==(const TopicModel& a, const TopicModel& b) {
    return a.num_topics == b.num_topics && a.vocabulary == b.vocabulary &&
           a.topic_word == b.topic_word && a.alpha_doc == b.alpha_doc &&
           a.beta_word == b.beta_word && a.seed == b.seed &&
           a.iterations == b.iterations;
  }
};

// Collapsed Gibbs sampler state. Exposed so that callers can step sweeps
// and inspect the count tables.
class LdaSampler {
 public:
  // Throws ValidationError on an empty vocabulary.
  LdaSampler(std::span<const std::vector<std::string>> corpus,
             const LdaConfig& cfg);

  void sweep();

  int num_topics() const { return num_topics_; }
  std::size_t num_tokens() const { return assignments_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  // Sum of the per-topic totals; equals num_tokens() at all times.
  std::int64_t assigned_total() const;
  std::int64_t topic_total(int topic) const { return topic_totals_[topic]; }
  const std::vector<int>& assignments() const { return assignments_; }

  TopicModel model() const;

 private:
  int num_topics_;
  double alpha_;
  double beta_;
  std::uint64_t seed_;
  int sweeps_done_ = 0;
  Rng rng_;
  std::vector<std::string> vocabulary_;
  std::vector<int> words_;        // token -> word id
  std::vector<int> docs_;         // token -> document id
  std::vector<int> assignments_;  // token -> topic
  std::vector<std::int32_t> doc_topic_;   // docs x topics
  std::vector<std::int32_t> topic_word_;  // topics x vocabulary
  std::vector<std::int64_t> topic_totals_;
  std::vector<double> weights_;
};

TopicModel fit_lda(std::span<const std::vector<std::string>> corpus,
                   const LdaConfig& cfg);

// Gibbs inference against a fixed model. Returns (n_dk + alpha) /
// (n + K alpha); uniform when no token is in the vocabulary.
std::vector<double> infer_topics(std::span<const std::string> tokens,
                                 const TopicModel& model, int iterations = 50,
                                 std::uint64_t seed = 1);

// Cosine between the two inferred distributions.
double topic_similarity(std::span<const std::string> question_tokens,
                        std::span<const std::string> answer_tokens,
                        const TopicModel& model, int iterations = 50,
                        std::uint64_t seed = 1);

// TSV: "#lda\tK=..\tV=..\talpha=..\tbeta=..\tseed=..\titerations=..", the
// vocabulary on one tab-separated line, then one row per topic.
void save_topic_model(std::ostream& out, const TopicModel& model);
void save_topic_model(const std::filesystem::path& path,
                      const TopicModel& model);
TopicModel load_topic_model(std::istream& in,
                            const std::string& source = "<stream>");
TopicModel load_topic_model(const std::filesystem::path& path);

}  // namespace polarlex

#endif  // POLARLEX_TOPICS_H_
