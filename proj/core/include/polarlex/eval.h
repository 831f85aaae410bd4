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

#ifndef POLARLEX_EVAL_H_
#define POLARLEX_EVAL_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polarlex/corpus.h"

namespace polarlex {

struct RunEntry {
  std::string cid;
  double score = 0.0;
  bool predicted_good = false;
};

struct RunQuery {
  std::string qid;
  std::vector<RunEntry> entries;
};

using RunFile = std::vector<RunQuery>;

// Ranked relevance lists, best first. Values lie in [0, 1]. All three throw
// ValidationError when nothing is relevant; callers skip such queries.
double average_precision(std::span<const bool> ranked_relevance);
double reciprocal_rank(std::span<const bool> ranked_relevance);
// Mean of recall@i over i = 1..n.
double average_recall(std::span<const bool> ranked_relevance);

struct QueryResult {
  std::string qid;
  double average_precision = 0.0;
  double reciprocal_rank = 0.0;
  double average_recall = 0.0;
};

// Aggregates are on a 0-100 scale; per-query values stay in [0, 1].
struct EvalReport {
  double map = 0.0;
  double avg_rec = 0.0;
  double mrr = 0.0;
  std::vector<QueryResult> per_query;  // scored queries, sorted by qid
  std::size_t num_scored = 0;
  std::size_t num_skipped = 0;
};

// Ranks each run query by descending score (file order on ties) and scores
// it against Good labels in `gold`. Queries without a Good comment are
// skipped. Throws ValidationError if a run query is missing from gold or
// its comment ids differ.
EvalReport evaluate(const RunFile& run, std::span<const Thread> gold);

// Chronological order: score = -rank_in_thread.
RunFile baseline_time(std::span<const Thread> threads);
// Seeded uniform shuffle per thread; score = n - position.
RunFile baseline_random(std::span<const Thread> threads, std::uint64_t seed);

// "qid\tcid\t0\tscore\t{true,false}" per comment; '#' lines are notes.
void write_run(std::ostream& out, const RunFile& run,
               std::span<const std::string> header_notes = {});
void write_run(const std::filesystem::path& path, const RunFile& run,
               std::span<const std::string> header_notes = {});
RunFile read_run(std::istream& in, const std::string& source = "<stream>");
RunFile read_run(const std::filesystem::path& path);

std::string format_report(const EvalReport& report);
std::string report_to_json(const EvalReport& report,
                           std::span<const std::string> header_notes = {});

}  // namespace polarlex

#endif  // POLARLEX_EVAL_H_
