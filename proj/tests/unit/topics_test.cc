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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "polarlex/error.h"
#include "synthetic.h"

namespace polarlex {
namespace {

using Tokens = std::vector<std::string>;

double sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

// Fraction of each learned topic's top-10 words that come from its majority
// planted vocabulary, minimized over topics.
double top_word_purity(const TopicModel& model, const testing::TopicCorpus& corpus) {
  double worst = 1.0;
  for (int t = 0; t < model.num_topics; ++t) {
    std::vector<int> order(model.vocab_size());
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + 10, order.end(),
                      [&](int a, int b) { return model.phi(t, a) > model.phi(t, b); });
    int from[2] = {0, 0};
    for (int i = 0; i < 10; ++i) {
      const auto& w = model.vocabulary[static_cast<std::size_t>(order[i])];
      for (int p = 0; p < 2; ++p) from[p] += corpus.vocab[p].count(w) ? 1 : 0;
    }
    worst = std::min(worst, std::max(from[0], from[1]) / 10.0);
  }
  return worst;
}

class PlantedTopics : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    Rng rng(17);
    corpus_ = new testing::TopicCorpus(testing::two_topic_corpus(rng, 200, 40, 30));
    LdaConfig cfg;
    cfg.num_topics = 2;
    cfg.iterations = 200;
    cfg.seed = 5;
    model_ = new TopicModel(fit_lda(corpus_->docs, cfg));
  }
  static void TearDownTestSuite() {
    delete model_;
    delete corpus_;
  }

  // Learned topic carrying planted topic `p`.
  static int matching(int p) {
    const auto& w = *corpus_->vocab[p].begin();
    const int id = *model_->find(w);
    return model_->phi(0, id) > model_->phi(1, id) ? 0 : 1;
  }

  static testing::TopicCorpus* corpus_;
  static TopicModel* model_;
};

testing::TopicCorpus* PlantedTopics::corpus_ = nullptr;
TopicModel* PlantedTopics::model_ = nullptr;

TEST_F(PlantedTopics, TopWordsArePure) {
  EXPECT_GE(top_word_purity(*model_, *corpus_), 0.9);
  EXPECT_NE(matching(0), matching(1));
}

TEST_F(PlantedTopics, RowsAreDistributions) {
  for (int t = 0; t < model_->num_topics; ++t) {
    double total = 0.0;
    for (std::size_t w = 0; w < model_->vocab_size(); ++w) {
      const double p = model_->phi(t, static_cast<int>(w));
      EXPECT_GE(p, 0.0);
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST_F(PlantedTopics, InferenceConcentratesOnPlantedTopic) {
  Rng rng(19);
  Tokens doc;
  const std::vector<std::string> vocab(corpus_->vocab[0].begin(),
                                       corpus_->vocab[0].end());
  for (int i = 0; i < 200; ++i) doc.push_back(vocab[rng.below(vocab.size())]);
  const auto theta = infer_topics(doc, *model_);
  EXPECT_GE(theta[static_cast<std::size_t>(matching(0))], 0.8);
  EXPECT_NEAR(sum(theta), 1.0, 1e-9);
}

TEST_F(PlantedTopics, EmptyAndOovInputIsUniform) {
  for (const Tokens& doc : {Tokens{}, Tokens{"unseen", "words"}}) {
    const auto theta = infer_topics(doc, *model_);
    ASSERT_EQ(theta.size(), 2u);
    EXPECT_DOUBLE_EQ(theta[0], 0.5);
    EXPECT_DOUBLE_EQ(theta[1], 0.5);
  }
}

TEST_F(PlantedTopics, InferenceOutputsAreNormalized) {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Tokens doc;
    for (int i = 0, n = static_cast<int>(rng.below(30)); i < n; ++i) {
      doc.push_back(model_->vocabulary[rng.below(model_->vocab_size())]);
    }
    const auto theta = infer_topics(doc, *model_, 20, rng.next());
    EXPECT_NEAR(sum(theta), 1.0, 1e-9);
    for (double p : theta) EXPECT_GE(p, 0.0);
  }
}

TEST_F(PlantedTopics, SimilarityConventions) {
  const Tokens a = {corpus_->docs[0].begin(), corpus_->docs[0].end()};
  EXPECT_NEAR(topic_similarity(a, a, *model_), 1.0, 1e-12);
  EXPECT_NEAR(topic_similarity(Tokens{"x"}, Tokens{"y"}, *model_), 1.0, 1e-12);
}

TEST_F(PlantedTopics, SameTopicPairsAreMoreSimilar) {
  double same = 0.0, different = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto& d0 = corpus_->docs[static_cast<std::size_t>(2 * i)];
    const auto& d0b = corpus_->docs[static_cast<std::size_t>((2 * i + 2) % 200)];
    const auto& d1 = corpus_->docs[static_cast<std::size_t>(2 * i + 1)];
    same += topic_similarity(d0, d0b, *model_);
    different += topic_similarity(d0, d1, *model_);
  }
  EXPECT_LT(different / 100, same / 100);
}

TEST(LdaSampler, SweepsKeepOneTopicPerToken) {
  Rng rng(29);
  const auto corpus = testing::two_topic_corpus(rng, 30, 15, 10);
  LdaConfig cfg;
  cfg.num_topics = 4;
  LdaSampler sampler(corpus.docs, cfg);
  EXPECT_EQ(sampler.num_tokens(), 30u * 15u);
  for (int s = 0; s < 10; ++s) {
    sampler.sweep();
    EXPECT_EQ(sampler.assigned_total(), static_cast<std::int64_t>(sampler.num_tokens()));
    std::int64_t from_topics = 0;
    for (int t = 0; t < 4; ++t) from_topics += sampler.topic_total(t);
    EXPECT_EQ(from_topics, static_cast<std::int64_t>(sampler.num_tokens()));
    for (int z : sampler.assignments()) {
      EXPECT_GE(z, 0);
      EXPECT_LT(z, 4);
    }
  }
}

TEST(FitLda, DeterministicAndDefaults) {
  Rng rng(31);
  const auto corpus = testing::two_topic_corpus(rng, 40, 10, 12);
  LdaConfig cfg;
  cfg.num_topics = 3;
  cfg.iterations = 30;
  cfg.seed = 8;
  const auto a = fit_lda(corpus.docs, cfg);
  const auto b = fit_lda(corpus.docs, cfg);
  EXPECT_EQ(a, b);
  EXPECT_EQ(infer_topics(corpus.docs[0], a, 50, 3), infer_topics(corpus.docs[0], b, 50, 3));
  EXPECT_DOUBLE_EQ(a.alpha_doc, 50.0 / 3.0);
  EXPECT_DOUBLE_EQ(a.beta_word, 0.01);
  EXPECT_TRUE(std::is_sorted(a.vocabulary.begin(), a.vocabulary.end()));
  EXPECT_EQ(LdaConfig{}.iterations, 500);
  EXPECT_EQ(LdaConfig{}.num_topics, 100);
}

TEST(FitLda, Errors) {
  LdaConfig cfg;
  cfg.num_topics = 2;
  EXPECT_THROW(fit_lda(std::vector<Tokens>{}, cfg), ValidationError);
  EXPECT_THROW(fit_lda(std::vector<Tokens>{{}, {}}, cfg), ValidationError);
  cfg.num_topics = 1;
  EXPECT_THROW(fit_lda(std::vector<Tokens>{{"a"}}, cfg), ValidationError);
  cfg.num_topics = 2;
  cfg.beta_word = 0.0;
  EXPECT_THROW(cfg.validate(), ValidationError);
}

TEST(TopicModelFile, RoundTrip) {
  Rng rng(37);
  const auto corpus = testing::two_topic_corpus(rng, 20, 10, 8);
  LdaConfig cfg;
  cfg.num_topics = 3;
  cfg.iterations = 10;
  cfg.alpha_doc = 0.1;
  const auto model = fit_lda(corpus.docs, cfg);
  std::stringstream io;
  save_topic_model(io, model);
  const auto back = load_topic_model(io);
  EXPECT_EQ(back, model);
  EXPECT_EQ(*back.find(model.vocabulary[3]), 3);
  std::istringstream truncated("#lda\tK=2\tV=2\talpha=1\tbeta=1\tseed=1\titerations=1\n");
  EXPECT_THROW(load_topic_model(truncated), ParseError);
}

}  // namespace
}  // namespace polarlex
