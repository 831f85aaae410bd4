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

#include "polarlex/ranker.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include "polarlex/error.h"
#include "polarlex/random.h"
#include "polarlex/text_io.h"

namespace polarlex {

void TrainConfig::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("lambda must be positive, got " + format_double(lambda));
  }
  if (epochs < 1) throw ValidationError("epochs must be at least 1");
}

namespace {

Scaler fit_scaler(std::span<const Instance> instances, std::size_t dims) {
  Scaler s;
  s.mean.assign(dims, 0.0);
  s.stddev.assign(dims, 0.0);
  const auto n = static_cast<double>(instances.size());
  for (const Instance& inst : instances) {
    for (std::size_t j = 0; j < dims; ++j) s.mean[j] += inst.values[j];
  }
  for (double& m : s.mean) m /= n;
  for (const Instance& inst : instances) {
    for (std::size_t j = 0; j < dims; ++j) {
      const double d = inst.values[j] - s.mean[j];
      s.stddev[j] += d * d;
    }
  }
  for (std::size_t j = 0; j < dims; ++j) {
    const double sd = std::sqrt(s.stddev[j] / n);
    // Constant columns can leave rounding residue instead of an exact zero.
    s.stddev[j] = sd > 1e-12 * std::max(1.0, std::abs(s.mean[j])) ? sd : 1.0;
  }
  return s;
}

double sign_of(BinaryLabel label) {
  return label == BinaryLabel::kGood ? 1.0 : -1.0;
}

double objective_on(const std::vector<double>& w, double b, double lambda,
                    const std::vector<double>& x, const std::vector<double>& y,
                    std::size_t dims) {
  double loss = 0.0;
  const std::size_t n = y.size();
  for (std::size_t i = 0; i < n; ++i) {
    double s = b;
    for (std::size_t j = 0; j < dims; ++j) s += w[j] * x[i * dims + j];
    loss += std::max(0.0, 1.0 - y[i] * s);
  }
  double norm = b * b;
  for (const double v : w) norm += v * v;
  return 0.5 * lambda * norm + loss / static_cast<double>(n);
}

}  // namespace

LinearModel train(std::span<const Instance> instances, const TrainConfig& cfg,
                  const std::string& schema_digest) {
  cfg.validate();
  if (instances.empty()) throw DegenerateError("train: no instances");
  const std::size_t dims = instances.front().values.size();
  std::size_t good = 0;
  for (const Instance& inst : instances) {
    if (inst.values.size() != dims) {
      throw ValidationError("train: instances have differing lengths " +
                            std::to_string(dims) + " and " +
                            std::to_string(inst.values.size()));
    }
    if (inst.label == BinaryLabel::kGood) ++good;
  }
  if (good == 0 || good == instances.size()) {
    throw DegenerateError("train: need both Good and Bad instances, got " +
                          std::to_string(good) + " Good of " +
                          std::to_string(instances.size()));
  }

  LinearModel model;
  model.schema_digest = schema_digest;
  model.config = cfg;
  model.scaler = fit_scaler(instances, dims);

  const std::size_t n = instances.size();
  std::vector<double> x(n * dims);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dims; ++j) {
      x[i * dims + j] = model.scaler.apply(j, instances[i].values[j]);
    }
    y[i] = sign_of(instances[i].label);
  }

  Rng rng(cfg.seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> w(dims, 0.0);
  double b = 0.0;
  const double radius = 1.0 / std::sqrt(cfg.lambda);

  std::vector<double> best_w = w;
  double best_b = 0.0;
  double best_objective = std::numeric_limits<double>::infinity();

  std::uint64_t t = 0;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (const std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (cfg.lambda * static_cast<double>(t));
      const double* xi = &x[i * dims];
      double s = b;
      for (std::size_t j = 0; j < dims; ++j) s += w[j] * xi[j];
      const double shrink = 1.0 - eta * cfg.lambda;
      for (double& v : w) v *= shrink;
      b *= shrink;
      if (y[i] * s < 1.0) {
        for (std::size_t j = 0; j < dims; ++j) w[j] += eta * y[i] * xi[j];
        b += eta * y[i];
      }
      double norm = b * b;
      for (const double v : w) norm += v * v;
      norm = std::sqrt(norm);
      if (norm > radius) {
        const double scale = radius / norm;
        for (double& v : w) v *= scale;
        b *= scale;
      }
    }
    // Keep the best epoch-end iterate; the last SGD step can be noisy.
    const double objective = objective_on(w, b, cfg.lambda, x, y, dims);
    if (objective < best_objective) {
      best_objective = objective;
      best_w = w;
      best_b = b;
    }
  }
  model.weights = std::move(best_w);
  model.bias = best_b;
  model.objective = best_objective;
  return model;
}

double svm_objective(const LinearModel& model,
                     std::span<const Instance> instances) {
  if (instances.empty()) throw ValidationError("objective: no instances");
  const std::size_t dims = model.size();
  std::vector<double> x;
  std::vector<double> y;
  x.reserve(instances.size() * dims);
  for (const Instance& inst : instances) {
    if (inst.values.size() != dims) {
      throw ValidationError("objective: instance length mismatch");
    }
    for (std::size_t j = 0; j < dims; ++j) {
      x.push_back(model.scaler.apply(j, inst.values[j]));
    }
    y.push_back(sign_of(inst.label));
  }
  return objective_on(model.weights, model.bias, model.config.lambda, x, y, dims);
}

double score(const LinearModel& model, std::span<const double> raw) {
  if (raw.size() != model.size()) {
    throw ValidationError("score: feature vector has " +
                          std::to_string(raw.size()) + " values, model expects " +
                          std::to_string(model.size()));
  }
  double s = model.bias;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    s += model.weights[j] * model.scaler.apply(j, raw[j]);
  }
  return s;
}

double score(const LinearModel& model, const FeatureVector& fv) {
  if (fv.schema && !model.schema_digest.empty() &&
      fv.schema->digest() != model.schema_digest) {
    throw ValidationError("score: feature schema " + fv.schema->digest() +
                          " does not match model schema " + model.schema_digest);
  }
  return score(model, std::span<const double>(fv.values));
}

void sort_by_score(std::vector<ScoredComment>& comments) {
  std::sort(comments.begin(), comments.end(),
            [](const ScoredComment& a, const ScoredComment& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.rank_in_thread != b.rank_in_thread) {
                return a.rank_in_thread < b.rank_in_thread;
              }
              return a.cid < b.cid;
            });
}

std::vector<ScoredComment> rank_thread(const LinearModel& model,
                                       std::span<const RankCandidate> thread) {
  std::vector<ScoredComment> ranked;
  ranked.reserve(thread.size());
  for (const RankCandidate& c : thread) {
    ranked.push_back({c.cid, c.rank_in_thread, score(model, c.values)});
  }
  sort_by_score(ranked);
  return ranked;
}

void save_model(std::ostream& out, const LinearModel& model,
                std::span<const std::string> header_notes) {
  out << "# polarlex linear SVM\n";
  out << "#schema\t" << model.schema_digest << '\n';
  out << "#train\tlambda=" << format_double(model.config.lambda)
      << "\tepochs=" << model.config.epochs << "\tseed=" << model.config.seed
      << "\tobjective=" << format_double(model.objective) << '\n';
  for (const std::string& note : header_notes) out << "#note\t" << note << '\n';
  out << "dims\t" << model.size() << '\n';
  for (std::size_t j = 0; j < model.size(); ++j) {
    out << "feature\t" << j << '\t' << format_double(model.scaler.mean[j])
        << '\t' << format_double(model.scaler.stddev[j]) << '\t'
        << format_double(model.weights[j]) << '\n';
  }
  out << "bias\t" << format_double(model.bias) << '\n';
}

void save_model(const std::filesystem::path& path, const LinearModel& model,
                std::span<const std::string> header_notes) {
  std::ofstream out = open_output(path);
  save_model(out, model, header_notes);
}

LinearModel load_model(std::istream& in, const std::string& source) {
  LinearModel model;
  std::string line;
  std::size_t line_no = 0;
  bool have_dims = false;
  bool have_bias = false;
  std::size_t next_feature = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (text.empty()) continue;
    const std::string context = source + ":" + std::to_string(line_no);
    const auto fields = split(text, '\t');
    if (fields[0] == "#schema") {
      if (fields.size() == 2) model.schema_digest = std::string(fields[1]);
    } else if (fields[0] == "#train") {
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto eq = fields[i].find('=');
        if (eq == std::string_view::npos) continue;
        const auto key = fields[i].substr(0, eq);
        const auto value = fields[i].substr(eq + 1);
        if (key == "lambda") model.config.lambda = parse_double(value, context);
        if (key == "epochs") {
          model.config.epochs = static_cast<int>(parse_int(value, context));
        }
        if (key == "seed") {
          model.config.seed = static_cast<std::uint64_t>(parse_int(value, context));
        }
        if (key == "objective") model.objective = parse_double(value, context);
      }
    } else if (fields[0].starts_with("#")) {
      continue;
    } else if (fields[0] == "dims" && fields.size() == 2) {
      const auto dims = static_cast<std::size_t>(parse_int(fields[1], context));
      model.weights.assign(dims, 0.0);
      model.scaler.mean.assign(dims, 0.0);
      model.scaler.stddev.assign(dims, 1.0);
      have_dims = true;
    } else if (fields[0] == "feature" && fields.size() == 5 && have_dims) {
      const auto j = static_cast<std::size_t>(parse_int(fields[1], context));
      if (j != next_feature || j >= model.size()) {
        throw ParseError(context + ": feature rows out of order");
      }
      model.scaler.mean[j] = parse_double(fields[2], context);
      model.scaler.stddev[j] = parse_double(fields[3], context);
      model.weights[j] = parse_double(fields[4], context);
      if (!(model.scaler.stddev[j] > 0.0)) {
        throw ParseError(context + ": stddev must be positive");
      }
      ++next_feature;
    } else if (fields[0] == "bias" && fields.size() == 2) {
      model.bias = parse_double(fields[1], context);
      have_bias = true;
    } else {
      throw ParseError(context + ": unrecognized model line");
    }
  }
  if (!have_dims || !have_bias || next_feature != model.size()) {
    throw ParseError(source + ": incomplete model file");
  }
  return model;
}

LinearModel load_model(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_model(in, path.string());
}

}  // namespace polarlex
