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

#include "polarlex/lexicon.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "polarlex/error.h"
#include "polarlex/text_io.h"

namespace polarlex {

std::optional<double> SeedSet::find(std::string_view word) const {
  if (const auto it = good.find(word); it != good.end()) return it->second;
  if (const auto it = bad.find(word); it != bad.end()) return it->second;
  return std::nullopt;
}

std::string_view to_string(PseudoLabelRule rule) {
  return rule == PseudoLabelRule::kScoreSum ? "score-sum" : "majority";
}

PseudoLabelRule pseudo_label_rule_from_string(std::string_view name) {
  if (name == "score-sum") return PseudoLabelRule::kScoreSum;
  if (name == "majority") return PseudoLabelRule::kMajority;
  throw Error(ErrorKind::kUsage, "unknown pseudo-label rule '" +
                                     std::string(name) +
                                     "' (expected score-sum or majority)");
}

void BootstrapConfig::validate() const {
  if (!(seed_fraction > 0.0 && seed_fraction <= 1.0)) {
    throw ValidationError("seed_fraction must lie in (0, 1], got " +
                          format_double(seed_fraction));
  }
  smoothing.validate();
}

std::optional<double> GoodnessLexicon::find(std::string_view word) const {
  const auto it = scores.find(word);
  if (it == scores.end()) return std::nullopt;
  return it->second;
}

std::size_t GoodnessLexicon::num_good() const {
  return static_cast<std::size_t>(std::count_if(
      scores.begin(), scores.end(), [](const auto& e) { return e.second > 0; }));
}

std::size_t GoodnessLexicon::num_bad() const {
  return static_cast<std::size_t>(std::count_if(
      scores.begin(), scores.end(), [](const auto& e) { return e.second < 0; }));
}

namespace {

struct ScoredWord {
  std::string word;
  double so;
  std::int64_t frequency;
};

void require_both_classes(const ClassCounts& counts, const char* what) {
  if (counts.n_good <= 0 || counts.n_bad <= 0) {
    throw DegenerateError(std::string(what) +
                          ": need both classes, got n_good=" +
                          std::to_string(counts.n_good) +
                          " n_bad=" + std::to_string(counts.n_bad));
  }
}

}  // namespace

SeedSet extract_seeds(const ClassCounts& counts, const BootstrapConfig& cfg) {
  cfg.validate();
  require_both_classes(counts, "seed extraction");
  const std::vector<std::string> vocabulary =
      scored_vocabulary(counts, cfg.smoothing);
  if (vocabulary.empty()) {
    throw DegenerateError("seed extraction: no word reaches min_count " +
                          std::to_string(cfg.smoothing.min_count));
  }

  std::vector<ScoredWord> scored;
  scored.reserve(vocabulary.size());
  for (const std::string& word : vocabulary) {
    scored.push_back({word, semantic_orientation(counts, word, cfg.smoothing),
                      counts.lookup(word).total()});
  }

  // The small slack keeps e.g. 0.2 * 5 from rounding up to 2.
  const auto k = static_cast<std::size_t>(std::ceil(
      cfg.seed_fraction * static_cast<double>(vocabulary.size()) - 1e-9));

  auto tie_break = [](const ScoredWord& a, const ScoredWord& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.word < b.word;
  };

  SeedSet seeds;
  std::sort(scored.begin(), scored.end(),
            [&](const ScoredWord& a, const ScoredWord& b) {
              if (a.so != b.so) return a.so > b.so;
              return tie_break(a, b);
            });
  for (std::size_t i = 0; i < k && i < scored.size() && scored[i].so > 0; ++i) {
    seeds.good.emplace(scored[i].word, scored[i].so);
  }
  std::sort(scored.begin(), scored.end(),
            [&](const ScoredWord& a, const ScoredWord& b) {
              if (a.so != b.so) return a.so < b.so;
              return tie_break(a, b);
            });
  for (std::size_t i = 0; i < k && i < scored.size() && scored[i].so < 0; ++i) {
    seeds.bad.emplace(scored[i].word, scored[i].so);
  }
  return seeds;
}

std::optional<BinaryLabel> pseudo_label(std::span<const std::string> tokens,
                                        const SeedSet& seeds,
                                        PseudoLabelRule rule) {
  double evidence = 0.0;
  for (const std::string& token : tokens) {
    const std::optional<double> score = seeds.find(token);
    if (!score) continue;
    if (rule == PseudoLabelRule::kScoreSum) {
      evidence += *score;
    } else {
      evidence += *score > 0 ? 1.0 : -1.0;
    }
  }
  if (evidence > 0) return BinaryLabel::kGood;
  if (evidence < 0) return BinaryLabel::kBad;
  return std::nullopt;
}

GoodnessLexicon bootstrap_lexicon(
    std::span<const std::vector<std::string>> unannotated,
    const SeedSet& seeds, const BootstrapConfig& cfg) {
  cfg.validate();
  if (seeds.empty()) {
    throw DegenerateError("bootstrap: the seed set is empty");
  }

  // Counted in batches and merged, which bounds the copy of pseudo-labeled
  // token lists to one batch.
  constexpr std::size_t kBatch = 8192;
  ClassCounts counts;
  std::vector<LabeledTokens> batch;
  batch.reserve(kBatch);
  auto flush = [&] {
    if (batch.empty()) return;
    counts = merge_counts(counts, build_counts(batch));
    batch.clear();
  };
  for (const std::vector<std::string>& tokens : unannotated) {
    const std::optional<BinaryLabel> label =
        pseudo_label(tokens, seeds, cfg.rule);
    if (!label) continue;
    batch.push_back({tokens, *label});
    if (batch.size() == kBatch) flush();
  }
  flush();

  if (counts.n_good == 0 || counts.n_bad == 0) {
    throw DegenerateError(
        "bootstrap: seeds labeled " + std::to_string(counts.n_good) +
        " comments Good and " + std::to_string(counts.n_bad) + " Bad out of " +
        std::to_string(unannotated.size()) + "; both classes are required");
  }

  GoodnessLexicon lexicon;
  for (const std::string& word : scored_vocabulary(counts, cfg.smoothing)) {
    const double so = semantic_orientation(counts, word, cfg.smoothing);
    if (so != 0.0) lexicon.scores.emplace(word, so);
  }
  lexicon.metadata.source_comments =
      static_cast<std::int64_t>(unannotated.size());
  lexicon.metadata.pseudo_good = counts.n_good;
  lexicon.metadata.pseudo_bad = counts.n_bad;
  lexicon.metadata.good_seeds = static_cast<std::int64_t>(seeds.good.size());
  lexicon.metadata.bad_seeds = static_cast<std::int64_t>(seeds.bad.size());
  return lexicon;
}

namespace {

void write_entries(std::ostream& out,
                   const std::map<std::string, double, std::less<>>& scores) {
  for (const auto& [word, score] : scores) {
    out << word << '\t' << format_double(score) << '\n';
  }
}

// Shared reader for the lexicon and seed layouts; '#' lines go to `header`.
std::map<std::string, double, std::less<>> read_entries(
    std::istream& in, const std::string& source,
    std::vector<std::string>* header) {
  std::map<std::string, double, std::less<>> scores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      if (header) header->emplace_back(text.substr(1));
      continue;
    }
    const std::string context = source + ":" + std::to_string(line_no);
    const auto fields = split(text, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError(context + ": expected word\\tscore");
    }
    const double score = parse_double(fields[1], context);
    if (!std::isfinite(score) || score == 0.0) {
      throw ParseError(context + ": score must be finite and non-zero");
    }
    if (!scores.emplace(std::string(fields[0]), score).second) {
      throw ParseError(context + ": duplicate entry '" +
                       std::string(fields[0]) + "'");
    }
  }
  return scores;
}

}  // namespace

void save_lexicon(std::ostream& out, const GoodnessLexicon& lexicon) {
  const LexiconMetadata& m = lexicon.metadata;
  out << "# polarlex goodness lexicon: word\tscore (positive = Good)\n";
  out << "#meta\tentries=" << lexicon.scores.size()
      << "\tgood=" << lexicon.num_good() << "\tbad=" << lexicon.num_bad()
      << "\tsource_comments=" << m.source_comments
      << "\tpseudo_good=" << m.pseudo_good << "\tpseudo_bad=" << m.pseudo_bad
      << "\tgood_seeds=" << m.good_seeds << "\tbad_seeds=" << m.bad_seeds
      << '\n';
  for (const std::string& note : m.notes) out << "#note\t" << note << '\n';
  write_entries(out, lexicon.scores);
}

void save_lexicon(const std::filesystem::path& path,
                  const GoodnessLexicon& lexicon) {
  std::ofstream out = open_output(path);
  save_lexicon(out, lexicon);
}

GoodnessLexicon load_lexicon(std::istream& in, const std::string& source) {
  std::vector<std::string> header;
  GoodnessLexicon lexicon;
  lexicon.scores = read_entries(in, source, &header);
  for (const std::string& line : header) {
    const auto fields = split(line, '\t');
    if (fields.empty()) continue;
    if (fields[0] == "note" && fields.size() >= 2) {
      lexicon.metadata.notes.emplace_back(
          std::string_view(line).substr(fields[0].size() + 1));
    } else if (fields[0] == "meta") {
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const std::size_t eq = fields[i].find('=');
        if (eq == std::string_view::npos) continue;
        const std::string_view key = fields[i].substr(0, eq);
        const std::string_view value = fields[i].substr(eq + 1);
        const std::string context = source + ": header field " +
                                    std::string(key);
        LexiconMetadata& m = lexicon.metadata;
        if (key == "source_comments") m.source_comments = parse_int(value, context);
        if (key == "pseudo_good") m.pseudo_good = parse_int(value, context);
        if (key == "pseudo_bad") m.pseudo_bad = parse_int(value, context);
        if (key == "good_seeds") m.good_seeds = parse_int(value, context);
        if (key == "bad_seeds") m.bad_seeds = parse_int(value, context);
      }
    }
  }
  return lexicon;
}

GoodnessLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_lexicon(in, path.string());
}

void save_seeds(std::ostream& out, const SeedSet& seeds,
                std::span<const std::string> header_notes) {
  out << "# polarlex seed words: word\tscore (positive = Good seed)\n";
  out << "#meta\tgood_seeds=" << seeds.good.size()
      << "\tbad_seeds=" << seeds.bad.size() << '\n';
  for (const std::string& note : header_notes) out << "#note\t" << note << '\n';
  std::map<std::string, double, std::less<>> all(seeds.good.begin(),
                                                 seeds.good.end());
  all.insert(seeds.bad.begin(), seeds.bad.end());
  write_entries(out, all);
}

void save_seeds(const std::filesystem::path& path, const SeedSet& seeds,
                std::span<const std::string> header_notes) {
  std::ofstream out = open_output(path);
  save_seeds(out, seeds, header_notes);
}

SeedSet load_seeds(std::istream& in, const std::string& source) {
  SeedSet seeds;
  for (const auto& [word, score] : read_entries(in, source, nullptr)) {
    (score > 0 ? seeds.good : seeds.bad).emplace(word, score);
  }
  return seeds;
}

SeedSet load_seeds(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_seeds(in, path.string());
}

}  // namespace polarlex
