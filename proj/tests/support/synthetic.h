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


// Synthetic data generators with planted structure for tests and the
// acceptance suite.

#ifndef POLARLEX_TESTS_SUPPORT_SYNTHETIC_H_
#define POLARLEX_TESTS_SUPPORT_SYNTHETIC_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "polarlex/cooccur.h"
#include "polarlex/corpus.h"
#include "polarlex/embeddings.h"
#include "polarlex/random.h"
#include "polarlex/ranker.h"

namespace polarlex::testing {

// Between 2 and `max_comments` comments over words w0..w{vocab-1}, with at
// least one comment of each class.
std::vector<LabeledTokens> random_labeled_corpus(Rng& rng,
                                                 int max_comments = 50,
                                                 int vocab = 12);

struct PlantedSpec {
  int threads = 1000;
  int comments_per_thread = 10;
  int good_vocab = 40;
  int bad_vocab = 40;
  int noise_vocab = 300;
  int topics = 5;
  int topic_vocab = 30;
  double good_rate = 0.35;
  std::uint64_t seed = 7;
};

// Threads whose Good comments carry words from a Good-only vocabulary and
// whose Bad comments carry words from a disjoint Bad-only vocabulary. All
// comments also draw shared noise words and words from the thread's topic.
std::vector<Thread> planted_threads(const PlantedSpec& spec);

std::string planted_good_word(int i);
std::string planted_bad_word(int i);

struct TopicCorpus {
  std::vector<std::vector<std::string>> docs;
  std::vector<int> doc_topic;  // planted topic of each document, 0 or 1
  std::set<std::string> vocab[2];
};

// Documents drawn from one of two disjoint vocabularies.
TopicCorpus two_topic_corpus(Rng& rng, int docs, int doc_length,
                             int vocab_per_topic);

// `n` words with standard normal coordinates.
EmbeddingStore random_store(Rng& rng, int n, int dim);

// Two Gaussian blobs of the given spread whose means are `separation` apart.
// Words "a<i>" belong to the first blob, "b<i>" to the second.
EmbeddingStore two_blobs(Rng& rng, int per_blob, int dim, double separation,
                         double spread);

// Points labeled by the sign of w.x with |w.x| >= margin for a random unit w.
std::vector<Instance> separable_instances(Rng& rng, int n, int dim,
                                          double margin);

}  // namespace polarlex::testing

#endif  // POLARLEX_TESTS_SUPPORT_SYNTHETIC_H_
