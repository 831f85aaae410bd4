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

#ifndef POLARLEX_KMEANS_H_
#define POLARLEX_KMEANS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polarlex/embeddings.h"

namespace polarlex {

struct Clustering {
  int k = 0;
  std::unordered_map<std::string, int> assignment;
  std::vector<std::vector<double>> centroids;
  // Sum of squared distances after every assignment step.
  std::vector<double> inertia_history;
  int iterations = 0;

  std::optional<int> cluster_of(std::string_view word) const;
  double inertia() const {
    return inertia_history.empty() ? 0.0 : inertia_history.back();
  }
};

// Lloyd's algorithm from a k-means++ start. Stops when assignments are
// stable or after max_iters assignment steps. A cluster that goes empty is
// re-seeded at the point farthest from its own centroid.
Clustering kmeans(const EmbeddingStore& store, int k, std::uint64_t seed,
                  int max_iters = 100);

// Cosine of the bag-of-cluster-id count vectors. OOV tokens are skipped.
double cluster_similarity(std::span<const std::string> question_tokens,
                          std::span<const std::string> answer_tokens,
                          const Clustering& clustering);

// "#k=<k>\tdim=<dim>" then "word\tcluster" rows in word order. Loading
// recomputes centroids as member means over `store`.
void save_clustering(std::ostream& out, const Clustering& clustering);
void save_clustering(const std::filesystem::path& path,
                     const Clustering& clustering);
Clustering load_clustering(std::istream& in, const EmbeddingStore& store,
                           const std::string& source = "<stream>");
Clustering load_clustering(const std::filesystem::path& path,
                           const EmbeddingStore& store);

}  // namespace polarlex

#endif  // POLARLEX_KMEANS_H_
