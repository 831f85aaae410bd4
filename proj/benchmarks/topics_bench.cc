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
#include "polarlex/topics.h"

namespace polarlex {
namespace {

// One Gibbs sweep per iteration, across topic counts.
void BM_LdaSweep(benchmark::State& state) {
  const auto docs = bench::random_docs(2000, 30, 3000, 1);
  LdaConfig cfg;
  cfg.num_topics = static_cast<int>(state.range(0));
  LdaSampler sampler(docs, cfg);
  for (auto _ : state) sampler.sweep();
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(sampler.num_tokens()));
}
BENCHMARK(BM_LdaSweep)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_InferTopics(benchmark::State& state) {
  const auto docs = bench::random_docs(1000, 30, 2000, 2);
  LdaConfig cfg;
  cfg.num_topics = 50;
  cfg.iterations = 20;
  const TopicModel model = fit_lda(docs, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(infer_topics(docs[0], model, 50, 1));
  }
}
BENCHMARK(BM_InferTopics);

}  // namespace
}  // namespace polarlex
