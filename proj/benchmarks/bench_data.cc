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


#include "bench_data.h"

#include "polarlex/random.h"

namespace polarlex::bench {

namespace {

int zipf_id(Rng& rng, int vocab) {
  const double u = rng.uniform();
  return static_cast<int>(u * u * u * vocab);
}

}  // namespace

std::vector<std::vector<std::string>> random_docs(int docs, int length,
                                                  int vocab,
                                                  std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(docs));
  for (auto& doc : out) {
    for (int i = 0; i < length; ++i) {
      doc.push_back("w" + std::to_string(zipf_id(rng, vocab)));
    }
  }
  return out;
}

std::vector<LabeledTokens> random_labeled(int docs, int length, int vocab,
                                          std::uint64_t seed) {
  std::vector<LabeledTokens> out;
  Rng rng(seed);
  for (auto& doc : random_docs(docs, length, vocab, seed)) {
    const BinaryLabel label =
        rng.below(2) == 0 ? BinaryLabel::kGood : BinaryLabel::kBad;
    out.push_back({std::move(doc), label});
  }
  return out;
}

EmbeddingStore random_store(int words, int dim, std::uint64_t seed) {
  Rng rng(seed);
  EmbeddingStore store(static_cast<std::size_t>(dim));
  std::vector<double> v(static_cast<std::size_t>(dim));
  for (int i = 0; i < words; ++i) {
    for (auto& x : v) x = rng.normal();
    store.set("w" + std::to_string(i), v);
  }
  return store;
}

}  // namespace polarlex::bench
