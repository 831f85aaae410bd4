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

#ifndef POLARLEX_TOOLS_CLI_H_
#define POLARLEX_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polarlex/corpus.h"
#include "polarlex/lexicon.h"
#include "polarlex/ppmi_svd.h"
#include "polarlex/ranker.h"
#include "polarlex/topics.h"

namespace polarlex::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitDegenerate = 3,
};

struct PipelineConfig {
  struct Paths {
    std::string train;
    std::string dev;
    std::string test;
    std::string unannotated;
    std::string embeddings;  // empty: train PPMI-SVD vectors
    std::string stopwords;   // empty: built-in English list
    std::string output_dir = "polarlex-out";
  } paths;
  std::string format = "jsonl";
  BootstrapConfig bootstrap;  // includes the smoothing settings
  TrainConfig train;
  int kmeans_k = 1000;
  int kmeans_max_iters = 100;
  LdaConfig lda;
  int lda_infer_iterations = 50;
  bool lda_include_unannotated = false;
  PpmiSvdConfig ppmi;
  std::uint64_t seed = 42;

  // Copies the global seed into every component.
  void propagate_seed();
};

// Reads the JSON config layout written by config_to_json.
PipelineConfig load_config(const std::string& path);
std::string config_to_json(const PipelineConfig& cfg);
// SHA-256 of the canonical JSON without the output directory, which names
// a location rather than content.
std::string config_digest(const PipelineConfig& cfg);

// Entry point shared by the binary and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace polarlex::cli

#endif  // POLARLEX_TOOLS_CLI_H_
