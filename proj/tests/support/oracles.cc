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


#include "oracles.h"

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <map>

namespace polarlex::testing {

namespace {

using BigFloat = boost::multiprecision::cpp_dec_float_50;

bool contains(const std::vector<std::string>& tokens, const std::string& w) {
  for (const auto& t : tokens) {
    if (t == w) return true;
  }
  return false;
}

BigFloat big_log2(const BigFloat& x) {
  return boost::multiprecision::log(x) / boost::multiprecision::log(BigFloat(2));
}

BigFloat big_pmi(const std::vector<LabeledTokens>& corpus,
                 const std::string& word, BinaryLabel label, double alpha) {
  BigFloat n_class = 0, n_total = 0, df_class = 0, df_total = 0;
  for (const auto& doc : corpus) {
    n_total += 1;
    const bool has = contains(doc.tokens, word);
    if (has) df_total += 1;
    if (doc.label == label) {
      n_class += 1;
      if (has) df_class += 1;
    }
  }
  const BigFloat a(alpha);
  const BigFloat joint = (df_class + a) / (n_total + 2 * a);
  const BigFloat marginal = (df_total + 2 * a) / (n_total + 2 * a);
  const BigFloat prior = n_class / n_total;
  return big_log2(joint / (marginal * prior));
}

}  // namespace

double brute_pmi(const std::vector<LabeledTokens>& corpus,
                 const std::string& word, BinaryLabel label, double alpha) {
  return static_cast<double>(big_pmi(corpus, word, label, alpha));
}

double brute_so(const std::vector<LabeledTokens>& corpus,
                const std::string& word, double alpha) {
  return static_cast<double>(big_pmi(corpus, word, BinaryLabel::kGood, alpha) -
                             big_pmi(corpus, word, BinaryLabel::kBad, alpha));
}

std::vector<std::pair<std::string, std::int64_t>> brute_vocabulary(
    const std::vector<LabeledTokens>& corpus) {
  std::map<std::string, std::int64_t> df;
  for (const auto& doc : corpus) {
    std::vector<std::string> seen;
    for (const auto& t : doc.tokens) {
      if (std::find(seen.begin(), seen.end(), t) == seen.end()) {
        seen.push_back(t);
        ++df[t];
      }
    }
  }
  return {df.begin(), df.end()};
}

double closed_form_so(std::int64_t df_good, std::int64_t df_bad,
                      std::int64_t n_good, std::int64_t n_bad, double alpha) {
  const BigFloat a(alpha);
  const BigFloat ratio = (BigFloat(df_good) + a) / (BigFloat(df_bad) + a) *
                         (BigFloat(n_bad) / BigFloat(n_good));
  return static_cast<double>(big_log2(ratio));
}

Rational exact_average_precision(const std::vector<bool>& relevance) {
  Rational sum = 0;
  std::int64_t hits = 0;
  for (std::size_t i = 0; i < relevance.size(); ++i) {
    if (!relevance[i]) continue;
    ++hits;
    sum += Rational(hits, static_cast<std::int64_t>(i + 1));
  }
  return sum / hits;
}

Rational exact_reciprocal_rank(const std::vector<bool>& relevance) {
  for (std::size_t i = 0; i < relevance.size(); ++i) {
    if (relevance[i]) return Rational(1, static_cast<std::int64_t>(i + 1));
  }
  return 0;
}

Rational exact_average_recall(const std::vector<bool>& relevance) {
  const auto total = static_cast<std::int64_t>(
      std::count(relevance.begin(), relevance.end(), true));
  Rational sum = 0;
  std::int64_t hits = 0;
  for (bool r : relevance) {
    if (r) ++hits;
    sum += Rational(hits, total);
  }
  return sum / static_cast<std::int64_t>(relevance.size());
}

}  // namespace polarlex::testing
