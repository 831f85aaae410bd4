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


#include "polarlex/embeddings.h"

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

EmbeddingStore store_of(
    std::initializer_list<std::pair<const char*, std::vector<double>>> rows) {
  EmbeddingStore store(rows.begin()->second.size());
  for (const auto& [w, v] : rows) store.set(w, v);
  return store;
}

EmbeddingStore parse(const std::string& text) {
  std::istringstream in(text);
  return load_embeddings(in, "test");
}

TEST(LoadEmbeddings, HeaderAndHeaderless) {
  const auto with = parse("2 3\na 1 0 0\nb 0 1 0\n");
  EXPECT_EQ(with.dim(), 3u);
  EXPECT_EQ(with.size(), 2u);
  EXPECT_EQ(std::vector<double>(with.find("b").begin(), with.find("b").end()),
            (std::vector<double>{0, 1, 0}));
  EXPECT_EQ(parse("a 1 0 0\nb 0 1 0\n"), with);
}

TEST(LoadEmbeddings, DimensionMismatch) {
  EXPECT_THROW(parse("2 3\na 1 0 0\nb 0 1\n"), ParseError);
  EXPECT_THROW(parse("a 1 0 0\nb 0 1\n"), ParseError);
  EXPECT_THROW(parse("a 1 x 0\n"), ParseError);
}

TEST(LoadEmbeddings, NumericWordsAreNotHeaders) {
  const auto store = parse("2011 0.5 0.5\nvisa 1 0\n");
  EXPECT_EQ(store.dim(), 2u);
  EXPECT_TRUE(store.contains("2011"));
}

TEST(LoadEmbeddings, DuplicateWordsWarn) {
  std::istringstream in("a 1 0\na 0 1\n");
  std::vector<std::string> warnings;
  const auto store = load_embeddings(in, "test", &warnings);
  EXPECT_EQ(store.size(), 1u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(SaveEmbeddings, RoundTrip) {
  Rng rng(3);
  const auto store = testing::random_store(rng, 30, 7);
  std::stringstream io;
  save_embeddings(io, store);
  EXPECT_EQ(load_embeddings(io, "rt"), store);
}

TEST(EmbeddingStore, RejectsWrongLength) {
  EmbeddingStore store(3);
  const std::vector<double> two = {1, 2};
  EXPECT_THROW(store.set("x", two), ValidationError);
  EXPECT_TRUE(store.find("x").empty());
}

TEST(Centroid, MeanWithRepetition) {
  const auto store = store_of({{"a", {1, 0, 0}}, {"b", {0, 1, 0}}});
  EXPECT_EQ(*centroid(Tokens{"a", "b"}, store), (std::vector<double>{0.5, 0.5, 0}));
  EXPECT_EQ(*centroid(Tokens{"a", "a"}, store), (std::vector<double>{1, 0, 0}));
  EXPECT_FALSE(centroid(Tokens{"x", "y"}, store).has_value());
  EXPECT_FALSE(centroid(Tokens{}, store).has_value());
  EXPECT_EQ(*centroid(Tokens{"a", "b", "z"}, store, {"b"}),
            (std::vector<double>{1, 0, 0}));
}

TEST(Centroid, TranslationEquivariant) {
  Rng rng(5);
  const auto store = testing::random_store(rng, 20, 4);
  const std::vector<double> shift = {0.5, -2.0, 3.0, 1e-3};
  EmbeddingStore shifted(4);
  for (std::size_t i = 0; i < store.size(); ++i) {
    std::vector<double> v(store.row(i).begin(), store.row(i).end());
    for (std::size_t j = 0; j < 4; ++j) v[j] += shift[j];
    shifted.set(store.words()[i], v);
  }
  const Tokens tokens = {"v1", "v3", "v3", "v7", "oov", "v19"};
  const auto c = *centroid(tokens, store);
  const auto d = *centroid(tokens, shifted);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(d[j], c[j] + shift[j], 1e-12);
}

TEST(Cosine, Examples) {
  const std::vector<double> x = {1, 0}, y = {0, 1}, xy = {1, 1}, zero = {0, 0};
  EXPECT_DOUBLE_EQ(cosine(x, x), 1.0);
  EXPECT_DOUBLE_EQ(cosine(x, y), 0.0);
  EXPECT_NEAR(cosine(xy, x), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(cosine(xy, x), 0.7071, 5e-5);
  EXPECT_EQ(cosine(zero, x), 0.0);
  const std::vector<double> three = {1, 2, 3};
  EXPECT_THROW(cosine(x, three), ValidationError);
}

TEST(Cosine, Properties) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> u(5), v(5);
    for (auto& x : u) x = rng.normal() * std::pow(10.0, rng.normal() * 3);
    for (auto& x : v) x = rng.normal();
    EXPECT_NEAR(cosine(u, u), 1.0, 1e-12);
    EXPECT_EQ(cosine(u, v), cosine(v, u));
    EXPECT_LE(std::abs(cosine(u, v)), 1.0 + 1e-12);
  }
}

TEST(QaCentroid, IdenticalOovAndHandComputed) {
  const auto store =
      store_of({{"a", {1, 0, 0}}, {"b", {0, 1, 0}}, {"c", {1, 1, 1}}});
  const Tokens body = {"a", "b"}, subject = {"c"};
  auto sims = qa_centroid_similarities(body, subject, body, store);
  EXPECT_DOUBLE_EQ(sims.body, 1.0);
  sims = qa_centroid_similarities(body, subject, Tokens{"zz"}, store);
  EXPECT_EQ(sims.body, 0.0);
  EXPECT_EQ(sims.subject, 0.0);
  // body mean (0.5, 0.5, 0), subject (1, 1, 1), comment [a, c] mean (1, 0.5, 0.5).
  sims = qa_centroid_similarities(body, subject, Tokens{"a", "c"}, store);
  EXPECT_NEAR(sims.body, 0.75 / (std::sqrt(0.5) * std::sqrt(1.5)), 1e-12);
  EXPECT_NEAR(sims.subject, 2.0 / (std::sqrt(3.0) * std::sqrt(1.5)), 1e-12);
}

EmbeddingStore graded_store() {
  // Cosines to "q": a = 1.0, b = 0.5, c = 0.0.
  return store_of({{"q", {1, 0}},
                   {"a", {2, 0}},
                   {"b", {0.5, std::sqrt(0.75)}},
                   {"c", {0, 3}}});
}

TEST(MaximizedSimilarity, Examples) {
  const auto store = graded_store();
  const Tokens q = {"q"};
  EXPECT_DOUBLE_EQ(maximized_similarity(q, Tokens{"q"}, store, 1), 1.0);
  const Tokens answer = {"c", "a", "b"};
  EXPECT_NEAR(maximized_similarity(q, answer, store, 2), 0.75, 1e-12);
  EXPECT_NEAR(maximized_similarity(q, answer, store, 5), 0.5, 1e-12);
  EXPECT_EQ(maximized_similarity(q, Tokens{"oov"}, store, 1), 0.0);
  EXPECT_EQ(maximized_similarity(Tokens{"oov"}, answer, store, 1), 0.0);
  EXPECT_THROW(maximized_similarity(q, answer, store, 0), ValidationError);
}

TEST(MaximizedSimilarity, MatchesRankAndAverageOracle) {
  Rng rng(11);
  const auto store = testing::random_store(rng, 40, 6);
  for (int trial = 0; trial < 100; ++trial) {
    Tokens q, a;
    for (int i = 0; i < 5; ++i) q.push_back("v" + std::to_string(rng.below(45)));
    for (int i = 0, n = 1 + static_cast<int>(rng.below(8)); i < n; ++i) {
      a.push_back("v" + std::to_string(rng.below(45)));
    }
    const auto center = centroid(q, store);
    std::vector<double> sims;
    for (const auto& t : a) {
      if (store.contains(t) && center) sims.push_back(cosine(store.find(t), *center));
    }
    std::sort(sims.begin(), sims.end(), std::greater<>());
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                          std::size_t{5}, kAllTokens}) {
      const std::size_t take = std::min(n, sims.size());
      const double expect =
          take == 0 ? 0.0
                    : std::accumulate(sims.begin(), sims.begin() + take, 0.0) / take;
      EXPECT_NEAR(maximized_similarity(q, a, store, n), expect, 1e-12);
    }
    if (!sims.empty()) {
      EXPECT_NEAR(maximized_similarity(q, a, store, kAllTokens),
                  std::accumulate(sims.begin(), sims.end(), 0.0) / sims.size(),
                  1e-12);
    }
  }
}

TEST(AlignedSimilarity, Examples) {
  const auto store = store_of({{"a", {1, 0}},
                               {"b", {0.5, std::sqrt(0.75)}},
                               {"o", {0, 1}}});
  const Tokens ab = {"a", "b"};
  EXPECT_NEAR(aligned_similarity(ab, Tokens{"b", "a"}, store), 1.0, 1e-12);
  EXPECT_NEAR(aligned_similarity(Tokens{"a"}, Tokens{"o"}, store), 0.0, 1e-12);
  EXPECT_NEAR(aligned_similarity(ab, Tokens{"a"}, store), 0.75, 1e-12);
  EXPECT_EQ(aligned_similarity(ab, Tokens{}, store), 0.0);
}

TEST(Similarities, StayInRange) {
  Rng rng(13);
  const auto store = testing::random_store(rng, 30, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Tokens q, a;
    for (int i = 0; i < 4; ++i) q.push_back("v" + std::to_string(rng.below(35)));
    for (int i = 0; i < 6; ++i) a.push_back("v" + std::to_string(rng.below(35)));
    const auto c = qa_centroid_similarities(q, a, a, store);
    for (double v : {c.body, c.subject, aligned_similarity(q, a, store),
                     maximized_similarity(q, a, store, 3)}) {
      EXPECT_GE(v, -1.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

}  // namespace
}  // namespace polarlex
