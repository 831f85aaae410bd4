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


#include "polarlex/ppmi_svd.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "polarlex/error.h"
#include "synthetic.h"

namespace polarlex {
namespace {

using Corpus = std::vector<std::vector<std::string>>;

Corpus two_sentences(int repeats) {
  Corpus corpus;
  for (int i = 0; i < repeats; ++i) {
    corpus.push_back({"red", "green", "blue", "yellow"});
    corpus.push_back({"cat", "dog", "horse", "mouse"});
  }
  return corpus;
}

TEST(PpmiSvd, WithinSentencePairsAreCloser) {
  PpmiSvdConfig cfg;
  cfg.dim = 4;
  cfg.window = 3;
  cfg.min_count = 1;
  const auto store = train_ppmi_svd(two_sentences(20), cfg);
  const std::vector<std::string> colors = {"red", "green", "blue", "yellow"};
  const std::vector<std::string> animals = {"cat", "dog", "horse", "mouse"};
  double within = 0.0, across = 0.0;
  int n_within = 0, n_across = 0;
  for (const auto* group : {&colors, &animals}) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        within += cosine(store.find((*group)[i]), store.find((*group)[j]));
        ++n_within;
      }
    }
  }
  for (const auto& c : colors) {
    for (const auto& a : animals) {
      across += cosine(store.find(c), store.find(a));
      ++n_across;
    }
  }
  EXPECT_GT(within / n_within, across / n_across + 0.5);
}

TEST(PpmiSvd, FullRankReconstructsPpmi) {
  Rng rng(3);
  Corpus corpus;
  for (int d = 0; d < 60; ++d) {
    std::vector<std::string> doc;
    for (int t = 0; t < 12; ++t) doc.push_back("w" + std::to_string(rng.below(25)));
    corpus.push_back(std::move(doc));
  }
  PpmiSvdConfig cfg;
  cfg.min_count = 1;
  cfg.window = 2;
  cfg.dim = 40;  // more than the vocabulary
  const auto f = factorize_ppmi(corpus, cfg);
  const Eigen::MatrixXd dense = Eigen::MatrixXd(f.ppmi);
  const Eigen::MatrixXd rebuilt =
      f.left * f.singular_values.asDiagonal() * f.right.transpose();
  EXPECT_LE((dense - rebuilt).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_GE((dense.array() >= 0.0).count(), dense.size());
  EXPECT_LE((dense - dense.transpose()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PpmiSvd, DeterministicAndNormalized) {
  testing::PlantedSpec spec;
  spec.threads = 50;
  Corpus corpus;
  for (const auto& t : testing::planted_threads(spec)) {
    for (const auto& c : t.comments) corpus.push_back(tokenize(c.text, {}));
  }
  PpmiSvdConfig cfg;
  cfg.dim = 16;
  cfg.seed = 9;
  const auto a = train_ppmi_svd(corpus, cfg);
  const auto b = train_ppmi_svd(corpus, cfg);
  EXPECT_EQ(a, b);
  std::ostringstream sa, sb;
  save_embeddings(sa, a);
  save_embeddings(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(a.dim(), 16u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double norm = 0.0;
    for (double v : a.row(i)) norm += v * v;
    EXPECT_NEAR(norm, 1.0, 1e-9);
  }
}

TEST(PpmiSvd, MinCountAndErrors) {
  PpmiSvdConfig cfg;
  cfg.dim = 2;
  cfg.min_count = 3;
  const Corpus corpus = {{"a", "b", "a"}, {"a", "c"}};
  const auto store = train_ppmi_svd(corpus, cfg);
  EXPECT_EQ(store.words(), std::vector<std::string>{"a"});
  EXPECT_THROW(train_ppmi_svd(Corpus{}, cfg), ValidationError);
  cfg.min_count = 10;
  EXPECT_THROW(train_ppmi_svd(corpus, cfg), ValidationError);
}

}  // namespace
}  // namespace polarlex
