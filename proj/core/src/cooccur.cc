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

#include "polarlex/cooccur.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include "polarlex/error.h"
#include "polarlex/text_io.h"

namespace polarlex {

DocFrequency ClassCounts::lookup(std::string_view word) const {
  const auto it = df.find(std::string(word));
  return it == df.end() ? DocFrequency{} : it->second;
}

void SmoothingConfig::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("smoothing alpha must be positive, got " +
                          format_double(alpha));
  }
  if (min_count < 1) {
    throw ValidationError("min_count must be at least 1, got " +
                          std::to_string(min_count));
  }
}

ClassCounts build_counts(std::span<const LabeledTokens> labeled) {
  if (labeled.empty()) {
    throw ValidationError("cannot build class counts from an empty corpus");
  }
  ClassCounts counts;
  std::unordered_set<std::string_view> seen;
  for (const LabeledTokens& doc : labeled) {
    const bool good = doc.label == BinaryLabel::kGood;
    (good ? counts.n_good : counts.n_bad) += 1;
    seen.clear();
    for (const std::string& token : doc.tokens) {
      if (!seen.insert(token).second) continue;
      DocFrequency& df = counts.df[token];
      (good ? df.good : df.bad) += 1;
    }
  }
  return counts;
}

ClassCounts merge_counts(const ClassCounts& a, const ClassCounts& b) {
  ClassCounts merged = a;
  merged.n_good += b.n_good;
  merged.n_bad += b.n_bad;
  for (const auto& [word, df] : b.df) {
    DocFrequency& target = merged.df[word];
    target.good += df.good;
    target.bad += df.bad;
  }
  return merged;
}

ClassCounts swap_classes(const ClassCounts& counts) {
  ClassCounts swapped;
  swapped.n_good = counts.n_bad;
  swapped.n_bad = counts.n_good;
  swapped.df.reserve(counts.df.size());
  for (const auto& [word, df] : counts.df) {
    swapped.df.emplace(word, DocFrequency{df.bad, df.good});
  }
  return swapped;
}

double pmi(const ClassCounts& counts, std::string_view word, BinaryLabel label,
           const SmoothingConfig& cfg) {
  cfg.validate();
  if (counts.n_good <= 0 || counts.n_bad <= 0) {
    throw DegenerateError("PMI needs both classes: n_good=" +
                          std::to_string(counts.n_good) +
                          " n_bad=" + std::to_string(counts.n_bad));
  }
  const DocFrequency df = counts.lookup(word);
  if (df.total() < cfg.min_count) {
    throw OutOfVocabularyError("word '" + std::string(word) + "' occurs in " +
                               std::to_string(df.total()) +
                               " comments, below min_count " +
                               std::to_string(cfg.min_count));
  }
  const double n = static_cast<double>(counts.total());
  const double denom = n + 2.0 * cfg.alpha;
  const double joint = (static_cast<double>(df.of(label)) + cfg.alpha) / denom;
  const double marginal =
      (static_cast<double>(df.good + df.bad) + 2.0 * cfg.alpha) / denom;
  const double prior = static_cast<double>(counts.of(label)) / n;
  return std::log2(joint / (marginal * prior));
}

double semantic_orientation(const ClassCounts& counts, std::string_view word,
                            const SmoothingConfig& cfg) {
  // Both terms share one code path, so swapping the classes negates the
  // result exactly.
  return pmi(counts, word, BinaryLabel::kGood, cfg) -
         pmi(counts, word, BinaryLabel::kBad, cfg);
}

std::vector<std::string> scored_vocabulary(const ClassCounts& counts,
                                           const SmoothingConfig& cfg) {
  cfg.validate();
  std::vector<std::string> words;
  for (const auto& [word, df] : counts.df) {
    if (df.total() >= cfg.min_count) words.push_back(word);
  }
  std::sort(words.begin(), words.end());
  return words;
}

void save_counts(std::ostream& out, const ClassCounts& counts) {
  out << "#n_good=" << counts.n_good << "\tn_bad=" << counts.n_bad << '\n';
  std::vector<const std::pair<const std::string, DocFrequency>*> rows;
  rows.reserve(counts.df.size());
  for (const auto& entry : counts.df) rows.push_back(&entry);
  std::sort(rows.begin(), rows.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  for (const auto* row : rows) {
    out << row->first << '\t' << row->second.good << '\t' << row->second.bad
        << '\n';
  }
}

void save_counts(const std::filesystem::path& path, const ClassCounts& counts) {
  std::ofstream out = open_output(path);
  save_counts(out, counts);
}

ClassCounts load_counts(std::istream& in, const std::string& source) {
  ClassCounts counts;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    const std::string context = source + ":" + std::to_string(line_no);
    if (!have_header) {
      const auto fields = split(text, '\t');
      if (fields.size() != 2 || !fields[0].starts_with("#n_good=") ||
          !fields[1].starts_with("n_bad=")) {
        throw ParseError(context + ": expected '#n_good=<int>\\tn_bad=<int>'");
      }
      counts.n_good = parse_int(fields[0].substr(8), context);
      counts.n_bad = parse_int(fields[1].substr(6), context);
      have_header = true;
      continue;
    }
    if (text.empty()) continue;
    const auto fields = split(text, '\t');
    if (fields.size() != 3) {
      throw ParseError(context + ": expected word\\tdf_good\\tdf_bad");
    }
    const DocFrequency df{parse_int(fields[1], context),
                          parse_int(fields[2], context)};
    if (df.good < 0 || df.bad < 0 || df.good > counts.n_good ||
        df.bad > counts.n_bad || df.total() < 1) {
      throw ValidationError(context + ": counts for '" +
                            std::string(fields[0]) +
                            "' are inconsistent with the class totals");
    }
    counts.df[std::string(fields[0])] = df;
  }
  if (!have_header) throw ParseError(source + ": missing header");
  return counts;
}

ClassCounts load_counts(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_counts(in, path.string());
}

}  // namespace polarlex
