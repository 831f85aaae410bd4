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

#ifndef POLARLEX_FEATURES_H_
#define POLARLEX_FEATURES_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarlex/corpus.h"
#include "polarlex/embeddings.h"
#include "polarlex/kmeans.h"
#include "polarlex/lexicon.h"
#include "polarlex/topics.h"

namespace polarlex {

inline constexpr std::size_t kLexiconBlockSize = 9;
inline constexpr std::size_t kSimilarityBlockSize = 9;
inline constexpr std::size_t kMetadataFixedSize = 6;
inline constexpr std::array<std::size_t, 4> kMaximizedTopN = {1, 2, 3, 5};

// SHA-256 over the newline-terminated names; identifies a column layout.
std::string schema_digest(std::span<const std::string> names);

// Ordered feature names for one pipeline run:
//   lexicon (9) | centroid (2) | maximized (4) | aligned | cluster | topic |
//   metadata (6) | one-hot category block (sorted training categories)
class FeatureSchema {
 public:
  explicit FeatureSchema(std::vector<std::string> categories);

  static FeatureSchema from_threads(std::span<const Thread> threads);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& categories() const { return categories_; }
  const std::string& digest() const { return digest_; }

  std::size_t lexicon_offset() const { return 0; }
  std::size_t similarity_offset() const { return kLexiconBlockSize; }
  std::size_t metadata_offset() const {
    return kLexiconBlockSize + kSimilarityBlockSize;
  }
  std::size_t category_offset() const {
    return metadata_offset() + kMetadataFixedSize;
  }
  // Index into the one-hot block, or nullopt for unseen categories.
  std::optional<std::size_t> category_index(std::string_view category) const;

  friend bool operator==(const FeatureSchema& a, const FeatureSchema& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> categories_;
  std::vector<std::string> names_;
  std::string digest_;
};

struct FeatureVector {
  std::shared_ptr<const FeatureSchema> schema;
  std::vector<double> values;
};

// Models consulted by assemble(). A null pointer zeroes that model's block.
struct FeatureContext {
  const GoodnessLexicon* lexicon = nullptr;
  const EmbeddingStore* embeddings = nullptr;
  const Clustering* clustering = nullptr;
  const TopicModel* topics = nullptr;
  // Content tokens for lexicon and similarity blocks. Lengths in the
  // metadata block use the same settings without stopwords.
  TokenizerConfig tokenizer;
  int topic_iterations = 50;
  std::uint64_t topic_seed = 1;
};

// (good count, bad count, good fraction, bad fraction, good sum, bad sum,
//  total sum, max good score, min bad score). Occurrences count.
std::array<double, kLexiconBlockSize> lexicon_features(
    std::span<const std::string> tokens, const GoodnessLexicon& lexicon);

// (has '?', answer length, question length, question/answer length ratio,
//  same author, rank) followed by the schema's category one-hot block.
// Throws ValidationError if `comment` is not part of `thread`.
std::vector<double> metadata_features(const Thread& thread,
                                      const Comment& comment,
                                      const FeatureSchema& schema,
                                      const TokenizerConfig& tokenizer);

FeatureVector assemble(const Thread& thread, const Comment& comment,
                       const FeatureContext& context,
                       const std::shared_ptr<const FeatureSchema>& schema);

struct FeatureRow {
  std::string qid;
  std::string cid;
  std::optional<Label> label;
  std::vector<double> values;
};

struct FeatureTable {
  std::vector<std::string> names;
  std::vector<FeatureRow> rows;
  std::vector<std::string> notes;  // '#' header lines, without the '#'
};

// Rows for every comment, in thread order.
std::vector<FeatureRow> featurize(std::span<const Thread> threads,
                                  const FeatureContext& context,
                                  const std::shared_ptr<const FeatureSchema>& schema);

// '#' notes, then "qid\tcid\tlabel\t<names...>", then one row per pair. An
// absent label is an empty field.
void write_feature_table(std::ostream& out, const FeatureTable& table);
void write_feature_table(const std::filesystem::path& path,
                         const FeatureTable& table);
FeatureTable read_feature_table(std::istream& in,
                                const std::string& source = "<stream>");
FeatureTable read_feature_table(const std::filesystem::path& path);

}  // namespace polarlex

#endif  // POLARLEX_FEATURES_H_
