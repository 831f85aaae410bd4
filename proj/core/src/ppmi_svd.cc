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

#include "polarlex/ppmi_svd.h"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "polarlex/error.h"
#include "polarlex/random.h"

namespace polarlex {

namespace {

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& m) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  return qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
}

}  // namespace

PpmiFactorization factorize_ppmi(
    std::span<const std::vector<std::string>> corpus, const PpmiSvdConfig& cfg) {
  if (corpus.empty()) throw ValidationError("PPMI-SVD: empty corpus");
  if (cfg.dim == 0) throw ValidationError("PPMI-SVD: dim must be positive");
  if (cfg.window == 0) throw ValidationError("PPMI-SVD: window must be positive");

  std::unordered_map<std::string, std::int64_t> frequency;
  for (const auto& doc : corpus) {
    for (const std::string& token : doc) ++frequency[token];
  }
  PpmiFactorization result;
  for (const auto& [word, count] : frequency) {
    if (count >= cfg.min_count) result.vocabulary.push_back(word);
  }
  if (result.vocabulary.empty()) {
    throw ValidationError("PPMI-SVD: no word reaches min_count " +
                          std::to_string(cfg.min_count));
  }
  std::sort(result.vocabulary.begin(), result.vocabulary.end());
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < result.vocabulary.size(); ++i) {
    index.emplace(result.vocabulary[i], static_cast<int>(i));
  }
  const auto n = static_cast<Eigen::Index>(result.vocabulary.size());

  // Symmetric windowed counts over in-vocabulary tokens.
  std::unordered_map<std::uint64_t, double> pairs;
  std::vector<int> ids;
  for (const auto& doc : corpus) {
    ids.clear();
    for (const std::string& token : doc) {
      if (const auto it = index.find(token); it != index.end()) {
        ids.push_back(it->second);
      }
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const std::size_t end = std::min(ids.size(), i + cfg.window + 1);
      for (std::size_t j = i + 1; j < end; ++j) {
        const auto a = static_cast<std::uint64_t>(ids[i]);
        const auto b = static_cast<std::uint64_t>(ids[j]);
        pairs[(a << 32) | b] += 1.0;
        pairs[(b << 32) | a] += 1.0;
      }
    }
  }
  std::vector<double> marginal(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (const auto& [key, count] : pairs) {
    marginal[key >> 32] += count;
    total += count;
  }
  std::vector<Eigen::Triplet<double>> triplets;
  for (const auto& [key, count] : pairs) {
    const auto row = static_cast<std::size_t>(key >> 32);
    const auto col = static_cast<std::size_t>(key & 0xffffffffu);
    const double value =
        std::log(count * total / (marginal[row] * marginal[col]));
    if (value > 0.0) {
      triplets.emplace_back(static_cast<int>(row), static_cast<int>(col), value);
    }
  }
  // Hash order differs between standard library implementations, so fix it.
  std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
    return a.row() != b.row() ? a.row() < b.row() : a.col() < b.col();
  });
  result.ppmi.resize(n, n);
  result.ppmi.setFromTriplets(triplets.begin(), triplets.end());

  // Randomized range finder with power iterations, then an exact SVD of the
  // small projected matrix.
  const Eigen::Index width =
      std::min<Eigen::Index>(static_cast<Eigen::Index>(cfg.dim + cfg.oversample), n);
  Rng rng(cfg.seed);
  Eigen::MatrixXd omega(n, width);
  for (Eigen::Index c = 0; c < width; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) omega(r, c) = rng.normal();
  }
  const Eigen::SparseMatrix<double> transposed = result.ppmi.transpose();
  Eigen::MatrixXd basis = orthonormal_basis(result.ppmi * omega);
  for (std::size_t it = 0; it < cfg.power_iterations; ++it) {
    const Eigen::MatrixXd back = orthonormal_basis(transposed * basis);
    basis = orthonormal_basis(result.ppmi * back);
  }
  const Eigen::MatrixXd projected = (transposed * basis).transpose();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(projected,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);

  const auto dim = static_cast<Eigen::Index>(cfg.dim);
  const Eigen::Index kept = std::min(dim, svd.singularValues().size());
  result.left = Eigen::MatrixXd::Zero(n, dim);
  result.right = Eigen::MatrixXd::Zero(n, dim);
  result.singular_values = Eigen::VectorXd::Zero(dim);
  result.left.leftCols(kept) = basis * svd.matrixU().leftCols(kept);
  result.right.leftCols(kept) = svd.matrixV().leftCols(kept);
  result.singular_values.head(kept) = svd.singularValues().head(kept);
  return result;
}

EmbeddingStore train_ppmi_svd(std::span<const std::vector<std::string>> corpus,
                              const PpmiSvdConfig& cfg) {
  const PpmiFactorization f = factorize_ppmi(corpus, cfg);
  EmbeddingStore store(cfg.dim);
  const Eigen::VectorXd scale = f.singular_values.cwiseSqrt();
  std::vector<double> row(cfg.dim);
  for (std::size_t i = 0; i < f.vocabulary.size(); ++i) {
    double norm = 0.0;
    for (std::size_t d = 0; d < cfg.dim; ++d) {
      row[d] = f.left(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d)) *
               scale(static_cast<Eigen::Index>(d));
      norm += row[d] * row[d];
    }
    if (norm > 0.0) {
      norm = std::sqrt(norm);
      for (double& v : row) v /= norm;
    }
    store.set(f.vocabulary[i], row);
  }
  return store;
}

}  // namespace polarlex
