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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "polarlex/error.h"
#include "polarlex/text_io.h"

namespace polarlex {

EmbeddingStore::EmbeddingStore(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw ValidationError("embedding dimension must be positive");
}

bool EmbeddingStore::set(const std::string& word, std::span<const double> vec) {
  if (vec.size() != dim_) {
    throw ValidationError("vector for '" + word + "' has " +
                          std::to_string(vec.size()) + " values, expected " +
                          std::to_string(dim_));
  }
  const auto [it, inserted] = index_.emplace(word, words_.size());
  if (inserted) {
    words_.push_back(word);
    data_.insert(data_.end(), vec.begin(), vec.end());
  } else {
    std::copy(vec.begin(), vec.end(), data_.begin() + it->second * dim_);
  }
  return inserted;
}

std::span<const double> EmbeddingStore::find(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return {};
  return row(it->second);
}

namespace {

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool is_count(std::string_view field) {
  return !field.empty() &&
         std::all_of(field.begin(), field.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

EmbeddingStore load_embeddings(std::istream& in, const std::string& source,
                               std::vector<std::string>* warnings) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (chomp(line).find_first_not_of(" \t") == std::string_view::npos) continue;
    lines.emplace_back(line_no, std::string(chomp(line)));
  }
  if (lines.empty()) throw ParseError(source + ": empty embedding file");

  std::size_t first_row = 0;
  std::size_t dim = 0;
  const auto head = fields_of(lines[0].second);
  // "<vocab> <dim>" is a header only if the next row agrees with it; a
  // headerless file may start with a numeric word in one dimension.
  if (head.size() == 2 && is_count(head[0]) && is_count(head[1])) {
    const std::size_t declared = static_cast<std::size_t>(
        parse_int(head[1], where(source, lines[0].first)));
    const bool next_agrees =
        lines.size() == 1 ||
        fields_of(lines[1].second).size() == declared + 1;
    if (declared > 0 && next_agrees) {
      dim = declared;
      first_row = 1;
    }
  }
  if (first_row == lines.size()) {
    return EmbeddingStore(dim);
  }
  if (dim == 0) {
    const auto fields = fields_of(lines[first_row].second);
    if (fields.size() < 2) {
      throw ParseError(where(source, lines[first_row].first) +
                       ": expected a word followed by its vector");
    }
    dim = fields.size() - 1;
  }

  EmbeddingStore store(dim);
  std::vector<double> values(dim);
  for (std::size_t i = first_row; i < lines.size(); ++i) {
    const std::string context = where(source, lines[i].first);
    const auto fields = fields_of(lines[i].second);
    if (fields.size() != dim + 1) {
      throw ParseError(context + ": row has " +
                       std::to_string(fields.size() - 1) +
                       " values, expected dimension " + std::to_string(dim));
    }
    for (std::size_t d = 0; d < dim; ++d) {
      values[d] = parse_double(fields[d + 1], context);
    }
    const std::string word(fields[0]);
    if (!store.set(word, values) && warnings) {
      warnings->push_back(context + ": duplicate word '" + word +
                          "', keeping the last row");
    }
  }
  return store;
}

EmbeddingStore load_embeddings(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<std::string> warnings;
  EmbeddingStore store = load_embeddings(in, path.string(), &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
  return store;
}

void save_embeddings(std::ostream& out, const EmbeddingStore& store) {
  out << store.size() << ' ' << store.dim() << '\n';
  for (std::size_t i = 0; i < store.size(); ++i) {
    out << store.words()[i];
    for (const double v : store.row(i)) out << ' ' << format_double(v);
    out << '\n';
  }
}

void save_embeddings(const std::filesystem::path& path,
                     const EmbeddingStore& store) {
  std::ofstream out = open_output(path);
  save_embeddings(out, store);
}

std::optional<std::vector<double>> centroid(std::span<const std::string> tokens,
                                            const EmbeddingStore& store,
                                            const Stopwords& stopwords) {
  std::vector<double> sum(store.dim(), 0.0);
  std::size_t used = 0;
  for (const std::string& token : tokens) {
    if (stopwords.contains(token)) continue;
    const auto vec = store.find(token);
    if (vec.empty()) continue;
    for (std::size_t d = 0; d < vec.size(); ++d) sum[d] += vec[d];
    ++used;
  }
  if (used == 0) return std::nullopt;
  for (double& v : sum) v /= static_cast<double>(used);
  return sum;
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw ValidationError("cosine of vectors with lengths " +
                          std::to_string(u.size()) + " and " +
                          std::to_string(v.size()));
  }
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

CentroidSimilarities qa_centroid_similarities(
    std::span<const std::string> body_tokens,
    std::span<const std::string> subject_tokens,
    std::span<const std::string> comment_tokens, const EmbeddingStore& store,
    const Stopwords& stopwords) {
  CentroidSimilarities sims;
  const auto answer = centroid(comment_tokens, store, stopwords);
  if (!answer) return sims;
  if (const auto body = centroid(body_tokens, store, stopwords)) {
    sims.body = cosine(*body, *answer);
  }
  if (const auto subject = centroid(subject_tokens, store, stopwords)) {
    sims.subject = cosine(*subject, *answer);
  }
  return sims;
}

namespace {

std::vector<std::span<const double>> content_vectors(
    std::span<const std::string> tokens, const EmbeddingStore& store,
    const Stopwords& stopwords) {
  std::vector<std::span<const double>> vectors;
  for (const std::string& token : tokens) {
    if (stopwords.contains(token)) continue;
    const auto vec = store.find(token);
    if (!vec.empty()) vectors.push_back(vec);
  }
  return vectors;
}

}  // namespace

double maximized_similarity(std::span<const std::string> question_tokens,
                            std::span<const std::string> answer_tokens,
                            const EmbeddingStore& store, std::size_t n,
                            const Stopwords& stopwords) {
  if (n == 0) throw ValidationError("maximized similarity needs n >= 1");
  const auto question = centroid(question_tokens, store, stopwords);
  if (!question) return 0.0;
  std::vector<double> sims;
  for (const auto vec : content_vectors(answer_tokens, store, stopwords)) {
    sims.push_back(cosine(vec, *question));
  }
  if (sims.empty()) return 0.0;
  const std::size_t take = std::min(n, sims.size());
  std::partial_sort(sims.begin(), sims.begin() + static_cast<std::ptrdiff_t>(take),
                    sims.end(), std::greater<>());
  double total = 0.0;
  for (std::size_t i = 0; i < take; ++i) total += sims[i];
  return total / static_cast<double>(take);
}

double aligned_similarity(std::span<const std::string> question_tokens,
                          std::span<const std::string> answer_tokens,
                          const EmbeddingStore& store,
                          const Stopwords& stopwords) {
  const auto question = content_vectors(question_tokens, store, stopwords);
  const auto answer = content_vectors(answer_tokens, store, stopwords);
  if (question.empty() || answer.empty()) return 0.0;
  double total = 0.0;
  for (const auto q : question) {
    double best = -1.0;
    for (const auto a : answer) best = std::max(best, cosine(q, a));
    total += best;
  }
  return total / static_cast<double>(question.size());
}

}  // namespace polarlex
