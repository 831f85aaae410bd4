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

#ifndef POLARLEX_RANKER_H_
#define POLARLEX_RANKER_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polarlex/corpus.h"
#include "polarlex/features.h"

namespace polarlex {

// z-score parameters fitted on training data. Constant features keep
// stddev 1.
struct Scaler {
  std::vector<double> mean;
  std::vector<double> stddev;

  std::size_t size() const { return mean.size(); }
  double apply(std::size_t index, double raw) const {
    return (raw - mean[index]) / stddev[index];
  }
};

struct TrainConfig {
  double lambda = 1e-4;
  int epochs = 20;
  std::uint64_t seed = 1;

  void validate() const;
};

struct Instance {
  std::vector<double> values;
  BinaryLabel label = BinaryLabel::kBad;
};

struct LinearModel {
  std::string schema_digest;  // empty when trained without a schema
  std::vector<double> weights;
  double bias = 0.0;
  Scaler scaler;
  TrainConfig config;
  double objective = 0.0;

  std::size_t size() const { return weights.size(); }
};

// Linear SVM: L2-regularized hinge loss on standardized features, solved
// by Pegasos-style stochastic subgradient steps of size 1/(lambda t) over a
// seeded shuffle per epoch. The bias rides along as a constant feature.
// Throws DegenerateError unless both classes are present.
LinearModel train(std::span<const Instance> instances, const TrainConfig& cfg,
                  const std::string& schema_digest = "");

// lambda/2 (|w|^2 + b^2) + mean hinge loss, on standardized inputs.
double svm_objective(const LinearModel& model,
                     std::span<const Instance> instances);

// weights . standardized(raw) + bias. Throws ValidationError on a length
// mismatch.
double score(const LinearModel& model, std::span<const double> raw);
// Also checks the schema digest.
double score(const LinearModel& model, const FeatureVector& fv);

struct RankCandidate {
  std::string cid;
  int rank_in_thread = 1;
  std::vector<double> values;
};

struct ScoredComment {
  std::string cid;
  int rank_in_thread = 1;
  double score = 0.0;
};

// Descending score; ties keep chronological order.
void sort_by_score(std::vector<ScoredComment>& comments);

std::vector<ScoredComment> rank_thread(const LinearModel& model,
                                       std::span<const RankCandidate> thread);

// Header lines, then "scaler\t<mean>\t<stddev>" and "weight\t<w>" rows and a
// final "bias\t<b>" row; all values in round-trip precision.
void save_model(std::ostream& out, const LinearModel& model,
                std::span<const std::string> header_notes = {});
void save_model(const std::filesystem::path& path, const LinearModel& model,
                std::span<const std::string> header_notes = {});
LinearModel load_model(std::istream& in, const std::string& source = "<stream>");
LinearModel load_model(const std::filesystem::path& path);

}  // namespace polarlex

#endif  // POLARLEX_RANKER_H_
