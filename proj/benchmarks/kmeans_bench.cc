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
#include "polarlex/kmeans.h"

namespace polarlex {
namespace {

void BM_KMeans(benchmark::State& state) {
  const auto store = bench::random_store(static_cast<int>(state.range(0)), 50, 1);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmeans(store, k, 7, 20));
  }
}
BENCHMARK(BM_KMeans)->Args({2000, 20})->Args({10000, 100})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace polarlex
