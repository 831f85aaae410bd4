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

#ifndef POLARLEX_COOCCUR_H_
#define POLARLEX_COOCCUR_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polarlex/corpus.h"

namespace polarlex {

// Number of comments of each class that contain a word at least once.
struct DocFrequency {
  std::int64_t good = 0;
  std::int64_t bad = 0;

  std::int64_t total() const { return good + bad; }
  std::int64_t of(BinaryLabel label) const {
    return label == BinaryLabel::kGood ? good : bad;
  }

  friend bool operator==(const DocFrequency&, const DocFrequency&) = default;
};

struct ClassCounts {
  std::int64_t n_good = 0;
  std::int64_t n_bad = 0;
  std::unordered_map<std::string, DocFrequency> df;

  std::int64_t total() const { return n_good + n_bad; }
  std::int64_t of(BinaryLabel label) const {
    return label == BinaryLabel::kGood ? n_good : n_bad;
  }
  DocFrequency lookup(std::string_view word) const;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct SmoothingConfig {
  double alpha = 0.5;         // additive smoothing on joint counts
  std::int64_t min_count = 5;  // minimum total document frequency

  void validate() const;
};

struct LabeledTokens {
  std::vector<std::string> tokens;
  BinaryLabel label = BinaryLabel::kGood;
};

// Document-frequency counts. Throws ValidationError on empty input.
ClassCounts build_counts(std::span<const LabeledTokens> labeled);

// Fieldwise sum.
ClassCounts merge_counts(const ClassCounts& a, const ClassCounts& b);

// Exchanges the roles of Good and Bad.
ClassCounts swap_classes(const ClassCounts& counts);

// Smoothed PMI in bits between "comment contains word" and "comment has
// class `label`":
//   p(w,c) = (df_c + alpha) / (N + 2 alpha)
//   p(w)   = (df_good + df_bad + 2 alpha) / (N + 2 alpha)
//   p(c)   = n_c / N
// Throws OutOfVocabularyError below min_count and DegenerateError when a
// class is empty.
double pmi(const ClassCounts& counts, std::string_view word, BinaryLabel label,
           const SmoothingConfig& cfg);

// pmi(w, Good) - pmi(w, Bad).
double semantic_orientation(const ClassCounts& counts, std::string_view word,
                            const SmoothingConfig& cfg);

// Words whose total document frequency reaches cfg.min_count, sorted.
std::vector<std::string> scored_vocabulary(const ClassCounts& counts,
                                           const SmoothingConfig& cfg);

// TSV: "#n_good=<int>\tn_bad=<int>" then "word\tdf_good\tdf_bad" rows in
// word order.
void save_counts(std::ostream& out, const ClassCounts& counts);
void save_counts(const std::filesystem::path& path, const ClassCounts& counts);
ClassCounts load_counts(std::istream& in, const std::string& source = "<stream>");
ClassCounts load_counts(const std::filesystem::path& path);

}  // namespace polarlex

#endif  // POLARLEX_COOCCUR_H_
