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

#include "polarlex/eval.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <unordered_map>

#include "polarlex/error.h"
#include "polarlex/random.h"
#include "polarlex/text_io.h"

namespace polarlex {

namespace {

std::size_t count_relevant(std::span<const bool> ranked) {
  const auto n = std::count(ranked.begin(), ranked.end(), true);
  if (n == 0) throw ValidationError("ranking has no relevant item");
  return static_cast<std::size_t>(n);
}

}  // namespace

double average_precision(std::span<const bool> ranked_relevance) {
  const std::size_t relevant = count_relevant(ranked_relevance);
  long double total = 0.0L;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < ranked_relevance.size(); ++i) {
    if (!ranked_relevance[i]) continue;
    ++hits;
    total += static_cast<long double>(hits) / static_cast<long double>(i + 1);
  }
  return static_cast<double>(total / static_cast<long double>(relevant));
}

double reciprocal_rank(std::span<const bool> ranked_relevance) {
  count_relevant(ranked_relevance);
  const auto first =
      std::find(ranked_relevance.begin(), ranked_relevance.end(), true);
  return 1.0 / static_cast<double>(first - ranked_relevance.begin() + 1);
}

double average_recall(std::span<const bool> ranked_relevance) {
  const std::size_t relevant = count_relevant(ranked_relevance);
  std::size_t hits = 0;
  std::size_t total = 0;  // sum of hit counts; recall@i = hits_i / relevant
  for (const bool r : ranked_relevance) {
    if (r) ++hits;
    total += hits;
  }
  return static_cast<double>(
      static_cast<long double>(total) /
      (static_cast<long double>(relevant) *
       static_cast<long double>(ranked_relevance.size())));
}

EvalReport evaluate(const RunFile& run, std::span<const Thread> gold) {
  std::unordered_map<std::string, const Thread*> by_qid;
  for (const Thread& t : gold) by_qid.emplace(t.question.id, &t);

  EvalReport report;
  std::set<std::string> seen_queries;
  for (const RunQuery& query : run) {
    if (!seen_queries.insert(query.qid).second) {
      throw ValidationError("run lists query " + query.qid + " more than once");
    }
    const auto it = by_qid.find(query.qid);
    if (it == by_qid.end()) {
      throw ValidationError("run query " + query.qid + " is not in the gold data");
    }
    const Thread& thread = *it->second;

    std::unordered_map<std::string, bool> relevance;
    for (const Comment& c : thread.comments) {
      if (!c.label) {
        throw ValidationError("gold comment " + c.id + " of query " + query.qid +
                              " has no label");
      }
      relevance.emplace(c.id, binarize_label(c.label) == BinaryLabel::kGood);
    }
    std::set<std::string> run_ids;
    for (const RunEntry& e : query.entries) run_ids.insert(e.cid);
    if (run_ids.size() != query.entries.size() ||
        run_ids.size() != relevance.size() ||
        !std::all_of(run_ids.begin(), run_ids.end(),
                     [&](const std::string& id) { return relevance.contains(id); })) {
      throw ValidationError("comment ids of run query " + query.qid +
                            " do not match the gold thread");
    }

    std::vector<const RunEntry*> ranked;
    for (const RunEntry& e : query.entries) ranked.push_back(&e);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const RunEntry* a, const RunEntry* b) {
                       return a->score > b->score;
                     });
    auto flags = std::make_unique<bool[]>(ranked.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      flags[i] = relevance.at(ranked[i]->cid);
    }
    const std::span<const bool> labels(flags.get(), ranked.size());
    if (std::find(labels.begin(), labels.end(), true) == labels.end()) {
      ++report.num_skipped;
      continue;
    }
    report.per_query.push_back({query.qid, average_precision(labels),
                                reciprocal_rank(labels), average_recall(labels)});
  }

  std::sort(report.per_query.begin(), report.per_query.end(),
            [](const QueryResult& a, const QueryResult& b) { return a.qid < b.qid; });
  report.num_scored = report.per_query.size();
  if (report.num_scored > 0) {
    long double map = 0.0L, mrr = 0.0L, avg_rec = 0.0L;
    for (const QueryResult& q : report.per_query) {
      map += q.average_precision;
      mrr += q.reciprocal_rank;
      avg_rec += q.average_recall;
    }
    const long double n = static_cast<long double>(report.num_scored);
    report.map = static_cast<double>(100.0L * map / n);
    report.mrr = static_cast<double>(100.0L * mrr / n);
    report.avg_rec = static_cast<double>(100.0L * avg_rec / n);
  }
  return report;
}

RunFile baseline_time(std::span<const Thread> threads) {
  RunFile run;
  for (const Thread& t : threads) {
    RunQuery query{t.question.id, {}};
    for (const Comment& c : t.comments) {
      query.entries.push_back({c.id, -static_cast<double>(c.rank_in_thread), false});
    }
    run.push_back(std::move(query));
  }
  return run;
}

RunFile baseline_random(std::span<const Thread> threads, std::uint64_t seed) {
  Rng rng(seed);
  RunFile run;
  for (const Thread& t : threads) {
    std::vector<const Comment*> order;
    for (const Comment& c : t.comments) order.push_back(&c);
    rng.shuffle(std::span<const Comment*>(order));
    RunQuery query{t.question.id, {}};
    const auto n = static_cast<double>(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      query.entries.push_back({order[i]->id, n - static_cast<double>(i), false});
    }
    run.push_back(std::move(query));
  }
  return run;
}

void write_run(std::ostream& out, const RunFile& run,
               std::span<const std::string> header_notes) {
  for (const std::string& note : header_notes) out << "# " << note << '\n';
  for (const RunQuery& query : run) {
    for (const RunEntry& e : query.entries) {
      out << query.qid << '\t' << e.cid << "\t0\t" << format_double(e.score)
          << '\t' << (e.predicted_good ? "true" : "false") << '\n';
    }
  }
}

void write_run(const std::filesystem::path& path, const RunFile& run,
               std::span<const std::string> header_notes) {
  std::ofstream out = open_output(path);
  write_run(out, run, header_notes);
}

RunFile read_run(std::istream& in, const std::string& source) {
  RunFile run;
  std::unordered_map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (text.empty() || text.front() == '#') continue;
    const std::string context = source + ":" + std::to_string(line_no);
    const auto fields = split(text, '\t');
    if (fields.size() != 5) {
      throw ParseError(context + ": expected qid\\tcid\\t0\\tscore\\tlabel");
    }
    RunEntry entry;
    entry.cid = std::string(fields[1]);
    entry.score = parse_double(fields[3], context);
    if (fields[4] == "true") {
      entry.predicted_good = true;
    } else if (fields[4] != "false") {
      throw ParseError(context + ": label must be 'true' or 'false'");
    }
    const std::string qid(fields[0]);
    auto [it, inserted] = index.emplace(qid, run.size());
    if (inserted) run.push_back({qid, {}});
    run[it->second].entries.push_back(std::move(entry));
  }
  return run;
}

RunFile read_run(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_run(in, path.string());
}

std::string format_report(const EvalReport& report) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "%-8s %8s %8s %8s\n%-8s %8.2f %8.2f %8.2f\n"
                "queries scored: %zu, skipped (no Good comment): %zu\n",
                "", "MAP", "AvgRec", "MRR", "run", report.map, report.avg_rec,
                report.mrr, report.num_scored, report.num_skipped);
  return buffer;
}

std::string report_to_json(const EvalReport& report,
                           std::span<const std::string> header_notes) {
  nlohmann::json per_query = nlohmann::json::array();
  for (const QueryResult& q : report.per_query) {
    per_query.push_back({{"qid", q.qid},
                         {"average_precision", q.average_precision},
                         {"reciprocal_rank", q.reciprocal_rank},
                         {"average_recall", q.average_recall}});
  }
  nlohmann::json j = {{"map", report.map},
                      {"avg_rec", report.avg_rec},
                      {"mrr", report.mrr},
                      {"num_scored", report.num_scored},
                      {"num_skipped", report.num_skipped},
                      {"per_query", std::move(per_query)},
                      {"notes", std::vector<std::string>(header_notes.begin(),
                                                         header_notes.end())}};
  return j.dump(2) + "\n";
}

}  // namespace polarlex
