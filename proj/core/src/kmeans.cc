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

#include "polarlex/kmeans.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include "polarlex/error.h"
#include "polarlex/random.h"
#include "polarlex/text_io.h"

namespace polarlex {

std::optional<int> Clustering::cluster_of(std::string_view word) const {
  const auto it = assignment.find(std::string(word));
  if (it == assignment.end()) return std::nullopt;
  return it->second;
}

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

std::vector<std::vector<double>> plus_plus_init(const EmbeddingStore& store,
                                                int k, Rng& rng) {
  const std::size_t n = store.size();
  std::vector<std::vector<double>> centroids;
  std::vector<bool> chosen(n, false);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());

  auto take = [&](std::size_t index) {
    chosen[index] = true;
    const auto point = store.row(index);
    centroids.emplace_back(point.begin(), point.end());
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], squared_distance(store.row(i), point));
    }
  };

  take(rng.below(n));
  while (static_cast<int>(centroids.size()) < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += nearest[i];
    std::size_t pick = n;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double cumulative = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (nearest[i] <= 0.0) continue;
        cumulative += nearest[i];
        pick = i;
        if (cumulative > target) break;
      }
    } else {
      // Every remaining point duplicates a centroid.
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < n; ++i) {
        if (!chosen[i]) free.push_back(i);
      }
      pick = free[rng.below(free.size())];
    }
    take(pick);
  }
  return centroids;
}

}  // namespace

Clustering kmeans(const EmbeddingStore& store, int k, std::uint64_t seed,
                  int max_iters) {
  const std::size_t n = store.size();
  if (k < 1) throw ValidationError("k-means needs k >= 1");
  if (static_cast<std::size_t>(k) > n) {
    throw ValidationError("k-means: k=" + std::to_string(k) + " exceeds the " +
                          std::to_string(n) + " stored vectors");
  }
  if (max_iters < 1) throw ValidationError("k-means needs max_iters >= 1");

  Rng rng(seed);
  Clustering result;
  result.k = k;
  result.centroids = plus_plus_init(store, k, rng);

  const std::size_t dim = store.dim();
  std::vector<int> assign(n, -1);
  std::vector<double> cost(n, 0.0);
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k));

  auto update_means = [&] {
    std::vector<std::vector<double>> sums(static_cast<std::size_t>(k),
                                          std::vector<double>(dim, 0.0));
    std::fill(sizes.begin(), sizes.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto point = store.row(i);
      auto& sum = sums[static_cast<std::size_t>(assign[i])];
      for (std::size_t d = 0; d < dim; ++d) sum[d] += point[d];
      ++sizes[static_cast<std::size_t>(assign[i])];
    }
    for (std::size_t c = 0; c < sums.size(); ++c) {
      if (sizes[c] == 0) continue;
      for (std::size_t d = 0; d < dim; ++d) {
        result.centroids[c][d] = sums[c][d] / static_cast<double>(sizes[c]);
      }
    }
  };

  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto point = store.row(i);
      int best = 0;
      double best_d = squared_distance(point, result.centroids[0]);
      for (int c = 1; c < k; ++c) {
        const double d =
            squared_distance(point, result.centroids[static_cast<std::size_t>(c)]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (assign[i] != best) changed = true;
      assign[i] = best;
      cost[i] = best_d;
      inertia += best_d;
    }
    result.inertia_history.push_back(inertia);
    result.iterations = iter + 1;
    if (!changed) break;

    update_means();
    std::vector<bool> reseeded(n, false);
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      if (sizes[c] != 0) continue;
      std::size_t farthest = n;
      double farthest_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (reseeded[i]) continue;
        const double d = squared_distance(
            store.row(i), result.centroids[static_cast<std::size_t>(assign[i])]);
        if (d > farthest_d) {
          farthest_d = d;
          farthest = i;
        }
      }
      reseeded[farthest] = true;
      const auto point = store.row(farthest);
      result.centroids[c].assign(point.begin(), point.end());
    }
  }
  update_means();

  for (std::size_t i = 0; i < n; ++i) {
    result.assignment.emplace(store.words()[i], assign[i]);
  }
  return result;
}

double cluster_similarity(std::span<const std::string> question_tokens,
                          std::span<const std::string> answer_tokens,
                          const Clustering& clustering) {
  auto bag = [&](std::span<const std::string> tokens) {
    std::map<int, double> counts;
    for (const std::string& token : tokens) {
      if (const auto id = clustering.cluster_of(token)) counts[*id] += 1.0;
    }
    return counts;
  };
  const auto q = bag(question_tokens);
  const auto a = bag(answer_tokens);
  if (q.empty() || a.empty()) return 0.0;
  double dot = 0.0, qq = 0.0, aa = 0.0;
  for (const auto& [id, count] : q) {
    qq += count * count;
    if (const auto it = a.find(id); it != a.end()) dot += count * it->second;
  }
  for (const auto& [id, count] : a) aa += count * count;
  return std::min(1.0, dot / (std::sqrt(qq) * std::sqrt(aa)));
}

void save_clustering(std::ostream& out, const Clustering& clustering) {
  const std::size_t dim =
      clustering.centroids.empty() ? 0 : clustering.centroids.front().size();
  out << "#k=" << clustering.k << "\tdim=" << dim << '\n';
  std::vector<std::pair<std::string, int>> rows(clustering.assignment.begin(),
                                                clustering.assignment.end());
  std::sort(rows.begin(), rows.end());
  for (const auto& [word, id] : rows) out << word << '\t' << id << '\n';
}

void save_clustering(const std::filesystem::path& path,
                     const Clustering& clustering) {
  std::ofstream out = open_output(path);
  save_clustering(out, clustering);
}

Clustering load_clustering(std::istream& in, const EmbeddingStore& store,
                           const std::string& source) {
  Clustering clustering;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    const std::string context = source + ":" + std::to_string(line_no);
    if (!have_header) {
      const auto fields = split(text, '\t');
      if (fields.size() != 2 || !fields[0].starts_with("#k=")) {
        throw ParseError(context + ": expected '#k=<k>\\tdim=<dim>'");
      }
      clustering.k = static_cast<int>(parse_int(fields[0].substr(3), context));
      if (clustering.k < 1) throw ParseError(context + ": k must be positive");
      have_header = true;
      continue;
    }
    if (text.empty()) continue;
    const auto fields = split(text, '\t');
    if (fields.size() != 2) throw ParseError(context + ": expected word\\tid");
    const long long id = parse_int(fields[1], context);
    if (id < 0 || id >= clustering.k) {
      throw ParseError(context + ": cluster id out of range");
    }
    if (!store.contains(fields[0])) {
      throw ValidationError(context + ": '" + std::string(fields[0]) +
                            "' is not in the embedding store");
    }
    clustering.assignment[std::string(fields[0])] = static_cast<int>(id);
  }
  if (!have_header) throw ParseError(source + ": missing header");

  clustering.centroids.assign(static_cast<std::size_t>(clustering.k),
                              std::vector<double>(store.dim(), 0.0));
  std::vector<std::size_t> sizes(static_cast<std::size_t>(clustering.k), 0);
  for (const auto& [word, id] : clustering.assignment) {
    const auto vec = store.find(word);
    auto& target = clustering.centroids[static_cast<std::size_t>(id)];
    for (std::size_t d = 0; d < vec.size(); ++d) target[d] += vec[d];
    ++sizes[static_cast<std::size_t>(id)];
  }
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] == 0) continue;
    for (double& v : clustering.centroids[c]) v /= static_cast<double>(sizes[c]);
  }
  return clustering;
}

Clustering load_clustering(const std::filesystem::path& path,
                           const EmbeddingStore& store) {
  std::ifstream in = open_input(path);
  return load_clustering(in, store, path.string());
}

}  // namespace polarlex
