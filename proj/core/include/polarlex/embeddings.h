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

#ifndef POLARLEX_EMBEDDINGS_H_
#define POLARLEX_EMBEDDINGS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polarlex {

using Stopwords = std::set<std::string, std::less<>>;

// Dense word vectors of a fixed dimension, in insertion order.
class EmbeddingStore {
 public:
  explicit EmbeddingStore(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  // Inserts or replaces. Returns false when `word` was already present.
  // Throws ValidationError on a length mismatch.
  bool set(const std::string& word, std::span<const double> vec);

  // Empty span for out-of-vocabulary words.
  std::span<const double> find(std::string_view word) const;
  bool contains(std::string_view word) const { return !find(word).empty(); }

  const std::vector<std::string>& words() const { return words_; }
  std::span<const double> row(std::size_t index) const {
    return {data_.data() + index * dim_, dim_};
  }

  friend bool operator==(const EmbeddingStore& a, const EmbeddingStore& b) {
    return a.dim_ == b.dim_ && a.words_ == b.words_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::unordered_map<std::string, std::size_t> index_;
};

// word2vec text format with an optional "<vocab> <dim>" first line.
// Duplicate words: last row wins and a warning is appended.
EmbeddingStore load_embeddings(std::istream& in, const std::string& source,
                               std::vector<std::string>* warnings = nullptr);
// Warnings go to stderr.
EmbeddingStore load_embeddings(const std::filesystem::path& path);
void save_embeddings(std::ostream& out, const EmbeddingStore& store);
void save_embeddings(const std::filesystem::path& path,
                     const EmbeddingStore& store);

// Mean of the in-vocabulary, non-stopword token vectors, repetitions
// included.
std::optional<std::vector<double>> centroid(std::span<const std::string> tokens,
                                            const EmbeddingStore& store,
                                            const Stopwords& stopwords = {});

// 0 when either vector has zero norm. Throws ValidationError on a length
// mismatch.
double cosine(std::span<const double> u, std::span<const double> v);

struct CentroidSimilarities {
  double body = 0.0;
  double subject = 0.0;
};

CentroidSimilarities qa_centroid_similarities(
    std::span<const std::string> body_tokens,
    std::span<const std::string> subject_tokens,
    std::span<const std::string> comment_tokens, const EmbeddingStore& store,
    const Stopwords& stopwords = {});

inline constexpr std::size_t kAllTokens = std::numeric_limits<std::size_t>::max();

// Mean of the `n` highest cosines between answer tokens and the question
// body centroid. Averages whatever exists when fewer tokens score.
double maximized_similarity(std::span<const std::string> question_tokens,
                            std::span<const std::string> answer_tokens,
                            const EmbeddingStore& store, std::size_t n,
                            const Stopwords& stopwords = {});

// Mean over question tokens of the best cosine against any answer token.
double aligned_similarity(std::span<const std::string> question_tokens,
                          std::span<const std::string> answer_tokens,
                          const EmbeddingStore& store,
                          const Stopwords& stopwords = {});

}  // namespace polarlex

#endif  // POLARLEX_EMBEDDINGS_H_
