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


#include <benchmark/benchmark.h>

#include "bench_data.h"
#include "polarlex/cooccur.h"
#include "polarlex/lexicon.h"

namespace polarlex {
namespace {

void BM_BuildCounts(benchmark::State& state) {
  const auto docs = bench::random_labeled(static_cast<int>(state.range(0)), 20,
                                          5000, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_counts(docs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildCounts)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SemanticOrientation(benchmark::State& state) {
  const auto counts = build_counts(bench::random_labeled(20000, 20, 5000, 2));
  const SmoothingConfig cfg;
  const auto vocab = scored_vocabulary(counts, cfg);
  for (auto _ : state) {
    double sum = 0.0;
    for (const auto& w : vocab) sum += semantic_orientation(counts, w, cfg);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(vocab.size()));
}
BENCHMARK(BM_SemanticOrientation);

void BM_BootstrapLexicon(benchmark::State& state) {
  const auto counts = build_counts(bench::random_labeled(5000, 20, 5000, 3));
  const BootstrapConfig cfg;
  const SeedSet seeds = extract_seeds(counts, cfg);
  const auto unannotated =
      bench::random_docs(static_cast<int>(state.range(0)), 20, 5000, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bootstrap_lexicon(unannotated, seeds, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BootstrapLexicon)->Arg(10000)->Arg(100000);

}  // namespace
}  // namespace polarlex
