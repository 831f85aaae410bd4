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

#ifndef POLARLEX_CORPUS_H_
#define POLARLEX_CORPUS_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace polarlex {

// Annotator judgement of a comment with respect to its thread's question.
enum class Label { kGood, kPotentiallyUseful, kBad };

// Two-way target used for lexicon induction and ranking.
enum class BinaryLabel { kGood, kBad };

std::string_view to_string(Label label);
std::string_view to_string(BinaryLabel label);
std::optional<Label> label_from_string(std::string_view text);

// PotentiallyUseful folds into Bad: only Good counts as relevant.
// Throws ValidationError on an absent label.
BinaryLabel binarize_label(std::optional<Label> label);

inline BinaryLabel opposite(BinaryLabel label) {
  return label == BinaryLabel::kGood ? BinaryLabel::kBad : BinaryLabel::kGood;
}

struct Comment {
  std::string id;
  std::string author_id;
  int rank_in_thread = 1;  // 1-based chronological position
  std::string text;
  std::optional<Label> label;

  friend bool operator==(const Comment&, const Comment&) = default;
};

struct Question {
  std::string id;
  std::string author_id;
  std::string subject;
  std::string body;
  std::string category;

  friend bool operator==(const Question&, const Question&) = default;
};

struct Thread {
  Question question;
  std::vector<Comment> comments;

  friend bool operator==(const Thread&, const Thread&) = default;
};

// Checks ids, rank ordering and uniqueness. Throws ValidationError.
void validate_thread(const Thread& thread);

enum class ThreadFormat { kJsonl, kSemevalXml };

ThreadFormat thread_format_from_string(std::string_view name);

std::vector<Thread> parse_threads(const std::filesystem::path& path,
                                  ThreadFormat format);
std::vector<Thread> parse_threads_jsonl(std::istream& in,
                                        const std::string& source = "<stream>");
std::vector<Thread> parse_threads_semeval_xml(
    std::istream& in, const std::string& source = "<stream>");

void write_threads_jsonl(std::ostream& out, const std::vector<Thread>& threads);
void write_threads_jsonl(const std::filesystem::path& path,
                         const std::vector<Thread>& threads);

// Removes <...> markup and decodes the five XML character entities.
std::string strip_tags(std::string_view text);

struct TokenizerConfig {
  bool lowercase = true;
  std::set<std::string, std::less<>> stopwords;
  std::size_t min_token_length = 1;  // in code points
};

// Maximal runs of Unicode letters and digits (UTF-8 in and out).
// Invalid UTF-8 bytes act as separators.
std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& cfg);

// Stopword file: UTF-8, one token per line, '#' starts a comment.
std::set<std::string, std::less<>> load_stopwords(
    const std::filesystem::path& path);
std::set<std::string, std::less<>> parse_stopwords(std::string_view text);
const std::set<std::string, std::less<>>& default_stopwords();

}  // namespace polarlex

#endif  // POLARLEX_CORPUS_H_
