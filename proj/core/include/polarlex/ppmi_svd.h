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

#ifndef POLARLEX_PPMI_SVD_H_
#define POLARLEX_PPMI_SVD_H_

// Count-based word vectors: windowed PPMI factorized by a seeded randomized
// truncated SVD. Lets the pipeline run without an external embedding file.

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polarlex/embeddings.h"

namespace polarlex {

struct PpmiSvdConfig {
  std::size_t dim = 100;
  std::size_t window = 10;  // tokens on each side
  std::int64_t min_count = 5;
  std::uint64_t seed = 1;
  std::size_t oversample = 10;
  std::size_t power_iterations = 3;
};

struct PpmiFactorization {
  std::vector<std::string> vocabulary;  // sorted
  Eigen::SparseMatrix<double> ppmi;     // vocabulary x vocabulary
  // ppmi ~= left * diag(singular_values) * right^T, `dim` columns each.
  Eigen::MatrixXd left;
  Eigen::VectorXd singular_values;
  Eigen::MatrixXd right;
};

PpmiFactorization factorize_ppmi(
    std::span<const std::vector<std::string>> corpus, const PpmiSvdConfig& cfg);

// Rows are left * sqrt(singular_values), L2-normalized.
EmbeddingStore train_ppmi_svd(std::span<const std::vector<std::string>> corpus,
                              const PpmiSvdConfig& cfg);

}  // namespace polarlex

#endif  // POLARLEX_PPMI_SVD_H_
