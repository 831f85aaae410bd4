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

#include "polarlex/features.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "polarlex/digest.h"
#include "polarlex/error.h"
#include "polarlex/text_io.h"

namespace polarlex {

namespace {

std::string sanitize(std::string_view text) {
  std::string out(text);
  std::replace_if(
      out.begin(), out.end(),
      [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return out;
}

}  // namespace

std::string schema_digest(std::span<const std::string> names) {
  std::string joined;
  for (const std::string& name : names) {
    joined += name;
    joined += '\n';
  }
  return sha256_hex(joined);
}

FeatureSchema::FeatureSchema(std::vector<std::string> categories) {
  for (std::string& c : categories) c = sanitize(c);
  std::sort(categories.begin(), categories.end());
  categories.erase(std::unique(categories.begin(), categories.end()),
                   categories.end());
  categories_ = std::move(categories);

  names_ = {
      "lex_good_count",    "lex_bad_count",        "lex_good_fraction",
      "lex_bad_fraction",  "lex_good_sum",         "lex_bad_sum",
      "lex_total_sum",     "lex_max_good",         "lex_min_bad",
      "sim_body_centroid", "sim_subject_centroid",
  };
  for (const std::size_t n : kMaximizedTopN) {
    names_.push_back("sim_max_top" + std::to_string(n));
  }
  names_.insert(names_.end(),
                {"sim_aligned", "sim_cluster", "sim_topic",
                 "meta_question_mark", "meta_answer_length",
                 "meta_question_length", "meta_length_ratio",
                 "meta_same_author", "meta_rank"});
  for (const std::string& c : categories_) names_.push_back("category=" + c);

  digest_ = schema_digest(names_);
}

FeatureSchema FeatureSchema::from_threads(std::span<const Thread> threads) {
  std::vector<std::string> categories;
  categories.reserve(threads.size());
  for (const Thread& t : threads) categories.push_back(t.question.category);
  return FeatureSchema(std::move(categories));
}

std::optional<std::size_t> FeatureSchema::category_index(
    std::string_view category) const {
  const std::string key = sanitize(category);
  const auto it = std::lower_bound(categories_.begin(), categories_.end(), key);
  if (it == categories_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - categories_.begin());
}

std::array<double, kLexiconBlockSize> lexicon_features(
    std::span<const std::string> tokens, const GoodnessLexicon& lexicon) {
  double good = 0, bad = 0, good_sum = 0, bad_sum = 0;
  double max_good = 0, min_bad = 0;
  for (const std::string& token : tokens) {
    const std::optional<double> score = lexicon.find(token);
    if (!score) continue;
    if (*score > 0) {
      max_good = good == 0 ? *score : std::max(max_good, *score);
      good += 1;
      good_sum += *score;
    } else if (*score < 0) {
      min_bad = bad == 0 ? *score : std::min(min_bad, *score);
      bad += 1;
      bad_sum += *score;
    }
  }
  const double hits = good + bad;
  return {good,
          bad,
          hits > 0 ? good / hits : 0.0,
          hits > 0 ? bad / hits : 0.0,
          good_sum,
          bad_sum,
          good_sum + bad_sum,
          max_good,
          min_bad};
}

std::vector<double> metadata_features(const Thread& thread,
                                      const Comment& comment,
                                      const FeatureSchema& schema,
                                      const TokenizerConfig& tokenizer) {
  const bool member = std::any_of(
      thread.comments.begin(), thread.comments.end(),
      [&](const Comment& c) { return c.id == comment.id; });
  if (!member) {
    throw ValidationError("comment " + comment.id +
                          " does not belong to question " + thread.question.id);
  }
  TokenizerConfig raw = tokenizer;
  raw.stopwords.clear();
  const auto answer_len =
      static_cast<double>(tokenize(comment.text, raw).size());
  const auto question_len =
      static_cast<double>(tokenize(thread.question.subject, raw).size() +
                          tokenize(thread.question.body, raw).size());

  std::vector<double> values(kMetadataFixedSize + schema.categories().size(),
                             0.0);
  values[0] = comment.text.find('?') != std::string::npos ? 1.0 : 0.0;
  values[1] = answer_len;
  values[2] = question_len;
  values[3] = question_len / std::max(answer_len, 1.0);
  values[4] = !comment.author_id.empty() &&
                      comment.author_id == thread.question.author_id
                  ? 1.0
                  : 0.0;
  values[5] = static_cast<double>(comment.rank_in_thread);
  if (const auto index = schema.category_index(thread.question.category)) {
    values[kMetadataFixedSize + *index] = 1.0;
  }
  return values;
}

FeatureVector assemble(const Thread& thread, const Comment& comment,
                       const FeatureContext& context,
                       const std::shared_ptr<const FeatureSchema>& schema) {
  if (!schema) throw ValidationError("assemble: no feature schema");
  FeatureVector fv{schema, std::vector<double>(schema->size(), 0.0)};
  std::vector<double>& v = fv.values;

  const auto answer = tokenize(comment.text, context.tokenizer);
  const auto body = tokenize(thread.question.body, context.tokenizer);
  const auto subject = tokenize(thread.question.subject, context.tokenizer);

  if (context.lexicon) {
    const auto block = lexicon_features(answer, *context.lexicon);
    std::copy(block.begin(), block.end(), v.begin() + schema->lexicon_offset());
  }

  std::size_t at = schema->similarity_offset();
  if (context.embeddings) {
    const EmbeddingStore& store = *context.embeddings;
    const auto sims = qa_centroid_similarities(body, subject, answer, store);
    v[at] = sims.body;
    v[at + 1] = sims.subject;
    for (std::size_t i = 0; i < kMaximizedTopN.size(); ++i) {
      v[at + 2 + i] = maximized_similarity(body, answer, store, kMaximizedTopN[i]);
    }
    v[at + 6] = aligned_similarity(body, answer, store);
  }
  if (context.clustering) {
    v[at + 7] = cluster_similarity(body, answer, *context.clustering);
  }
  if (context.topics) {
    v[at + 8] = topic_similarity(body, answer, *context.topics,
                                 context.topic_iterations, context.topic_seed);
  }

  const auto meta = metadata_features(thread, comment, *schema, context.tokenizer);
  at = schema->metadata_offset();
  if (at + meta.size() != v.size()) {
    throw ValidationError("assemble: metadata block does not match the schema");
  }
  std::copy(meta.begin(), meta.end(), v.begin() + static_cast<std::ptrdiff_t>(at));

  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw ValidationError("feature " + schema->names()[i] + " of comment " +
                            comment.id + " is not finite");
    }
  }
  return fv;
}

std::vector<FeatureRow> featurize(
    std::span<const Thread> threads, const FeatureContext& context,
    const std::shared_ptr<const FeatureSchema>& schema) {
  std::vector<FeatureRow> rows;
  for (const Thread& thread : threads) {
    for (const Comment& comment : thread.comments) {
      rows.push_back({thread.question.id, comment.id, comment.label,
                      assemble(thread, comment, context, schema).values});
    }
  }
  return rows;
}

void write_feature_table(std::ostream& out, const FeatureTable& table) {
  for (const std::string& note : table.notes) out << '#' << note << '\n';
  out << "qid\tcid\tlabel";
  for (const std::string& name : table.names) out << '\t' << name;
  out << '\n';
  for (const FeatureRow& row : table.rows) {
    out << row.qid << '\t' << row.cid << '\t'
        << (row.label ? to_string(*row.label) : "");
    for (const double value : row.values) out << '\t' << format_double(value);
    out << '\n';
  }
}

void write_feature_table(const std::filesystem::path& path,
                         const FeatureTable& table) {
  std::ofstream out = open_output(path);
  write_feature_table(out, table);
}

FeatureTable read_feature_table(std::istream& in, const std::string& source) {
  FeatureTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (text.empty()) continue;
    const std::string context = source + ":" + std::to_string(line_no);
    if (!have_header) {
      if (text.front() == '#') {
        table.notes.emplace_back(text.substr(1));
        continue;
      }
      const auto fields = split(text, '\t');
      if (fields.size() < 3 || fields[0] != "qid" || fields[1] != "cid" ||
          fields[2] != "label") {
        throw ParseError(context + ": expected header 'qid\\tcid\\tlabel\\t...'");
      }
      for (std::size_t i = 3; i < fields.size(); ++i) {
        table.names.emplace_back(fields[i]);
      }
      have_header = true;
      continue;
    }
    const auto fields = split(text, '\t');
    if (fields.size() != table.names.size() + 3) {
      throw ParseError(context + ": row has " + std::to_string(fields.size()) +
                       " fields, expected " +
                       std::to_string(table.names.size() + 3));
    }
    FeatureRow row;
    row.qid = std::string(fields[0]);
    row.cid = std::string(fields[1]);
    if (!fields[2].empty()) {
      row.label = label_from_string(fields[2]);
      if (!row.label) {
        throw ParseError(context + ": unknown label '" + std::string(fields[2]) +
                         "'");
      }
    }
    row.values.reserve(table.names.size());
    for (std::size_t i = 3; i < fields.size(); ++i) {
      row.values.push_back(parse_double(fields[i], context));
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(source + ": missing header row");
  return table;
}

FeatureTable read_feature_table(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_feature_table(in, path.string());
}

}  // namespace polarlex
