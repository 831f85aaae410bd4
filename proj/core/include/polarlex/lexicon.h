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

#ifndef POLARLEX_LEXICON_H_
#define POLARLEX_LEXICON_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarlex/cooccur.h"
#include "polarlex/corpus.h"

namespace polarlex {

// Extreme-orientation words picked from annotated comments.
struct SeedSet {
  std::map<std::string, double, std::less<>> good;  // SO > 0
  std::map<std::string, double, std::less<>> bad;   // SO < 0

  bool empty() const { return good.empty() && bad.empty(); }
  // Signed score of a seed word, if it is one.
  std::optional<double> find(std::string_view word) const;

  friend bool operator==(const SeedSet&, const SeedSet&) = default;
};

enum class PseudoLabelRule { kScoreSum, kMajority };

std::string_view to_string(PseudoLabelRule rule);
PseudoLabelRule pseudo_label_rule_from_string(std::string_view name);

struct BootstrapConfig {
  double seed_fraction = 0.05;  // per polarity
  SmoothingConfig smoothing;
  PseudoLabelRule rule = PseudoLabelRule::kScoreSum;

  void validate() const;
};

struct LexiconMetadata {
  std::int64_t source_comments = 0;
  std::int64_t pseudo_good = 0;
  std::int64_t pseudo_bad = 0;
  std::int64_t good_seeds = 0;
  std::int64_t bad_seeds = 0;
  // Free-form "key=value" lines carried into the file header, e.g. the
  // config digest. Order is preserved.
  std::vector<std::string> notes;

  friend bool operator==(const LexiconMetadata&,
                         const LexiconMetadata&) = default;
};

// Word -> semantic orientation. Positive is Good-associated.
struct GoodnessLexicon {
  std::map<std::string, double, std::less<>> scores;
  LexiconMetadata metadata;

  std::optional<double> find(std::string_view word) const;
  std::size_t num_good() const;
  std::size_t num_bad() const;

  friend bool operator==(const GoodnessLexicon&,
                         const GoodnessLexicon&) = default;
};

// With V scored words and k = ceil(seed_fraction * V), takes the k
// highest-SO words that are positive and the k lowest that are negative.
// Ties go to the more frequent word, then to the lexicographically smaller.
SeedSet extract_seeds(const ClassCounts& counts, const BootstrapConfig& cfg);

// Distant label from seed evidence; nullopt when there is none or it
// cancels out.
std::optional<BinaryLabel> pseudo_label(std::span<const std::string> tokens,
                                        const SeedSet& seeds,
                                        PseudoLabelRule rule =
                                            PseudoLabelRule::kScoreSum);

// Pseudo-labels every comment, then re-scores the entire
// vocabulary of the pseudo-labeled comments. Throws DegenerateError when a
// pseudo-class ends up empty.
GoodnessLexicon bootstrap_lexicon(
    std::span<const std::vector<std::string>> unannotated,
    const SeedSet& seeds, const BootstrapConfig& cfg);

// Lexicon TSV: '#' header lines, then "word\tscore" in word order.
void save_lexicon(std::ostream& out, const GoodnessLexicon& lexicon);
void save_lexicon(const std::filesystem::path& path,
                  const GoodnessLexicon& lexicon);
GoodnessLexicon load_lexicon(std::istream& in,
                             const std::string& source = "<stream>");
GoodnessLexicon load_lexicon(const std::filesystem::path& path);

// Seeds use the lexicon layout; the sign of each score picks the side.
void save_seeds(std::ostream& out, const SeedSet& seeds,
                std::span<const std::string> header_notes = {});
void save_seeds(const std::filesystem::path& path, const SeedSet& seeds,
                std::span<const std::string> header_notes = {});
SeedSet load_seeds(std::istream& in, const std::string& source = "<stream>");
SeedSet load_seeds(const std::filesystem::path& path);

}  // namespace polarlex

#endif  // POLARLEX_LEXICON_H_
