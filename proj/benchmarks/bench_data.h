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


#ifndef POLARLEX_BENCHMARKS_BENCH_DATA_H_
#define POLARLEX_BENCHMARKS_BENCH_DATA_H_

#include <string>
#include <vector>

#include "polarlex/cooccur.h"
#include "polarlex/embeddings.h"

namespace polarlex::bench {

// Zipf-like token streams over `vocab` words.
std::vector<std::vector<std::string>> random_docs(int docs, int length,
                                                  int vocab,
                                                  std::uint64_t seed);

// Documents with uniformly random labels.
std::vector<LabeledTokens> random_labeled(int docs, int length, int vocab,
                                          std::uint64_t seed);

EmbeddingStore random_store(int words, int dim, std::uint64_t seed);

}  // namespace polarlex::bench

#endif  // POLARLEX_BENCHMARKS_BENCH_DATA_H_
