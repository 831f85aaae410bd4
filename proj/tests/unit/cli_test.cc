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


#include "cli.h"

#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "paths.h"
#include "polarlex/error.h"
#include "polarlex/lexicon.h"

namespace polarlex::cli {
namespace {

using testing::data_path;
using testing::ScratchDir;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

// A config small enough for the four-comment corpus.
std::filesystem::path tiny_config(const ScratchDir& dir) {
  const auto path = dir / "cfg.json";
  write_file(path, R"({"paths": {"train": ")" + data_path("four_comments.jsonl").string() +
                       R"(", "unannotated": ")" +
                       data_path("four_comments.jsonl").string() +
                       R"("}, "smoothing": {"min_count": 1},
      "bootstrap": {"seed_fraction": 0.2}, "kmeans": {"k": 3},
      "lda": {"num_topics": 2, "iterations": 20},
      "ppmi": {"dim": 3, "min_count": 1}})");
  return path;
}

void run_chain(const std::filesystem::path& cfg, const std::filesystem::path& out) {
  const std::string data = data_path("four_comments.jsonl").string();
  const std::vector<std::string> common = {"--config", cfg.string(), "--output-dir",
                                           out.string()};
  auto with = [&](std::vector<std::string> args) {
    args.insert(args.begin() + 1, common.begin(), common.end());
    const Result r = invoke(args);
    ASSERT_EQ(r.code, kExitOk) << args[0] << ": " << r.err;
  };
  with({"induce-seeds"});
  with({"bootstrap"});
  with({"featurize", "--input", data, "--lexicon", (out / "lexicon.tsv").string()});
  with({"train", "--features", (out / "four_comments.features.tsv").string()});
  with({"predict", "--features", (out / "four_comments.features.tsv").string()});
  with({"evaluate", "--run", (out / "run.tsv").string(), "--gold", data});
}

TEST(Cli, FullChainOnTinyCorpus) {
  ScratchDir dir;
  run_chain(tiny_config(dir), dir / "out");
  const GoodnessLexicon lex = load_lexicon(dir / "out" / "lexicon.tsv");
  ASSERT_TRUE(lex.find("visa").has_value());
  EXPECT_GT(*lex.find("visa"), 0.0);
  ASSERT_TRUE(lex.find("spam").has_value());
  EXPECT_LT(*lex.find("spam"), 0.0);
  const std::string report = slurp(dir / "out" / "report.json");
  EXPECT_NE(report.find("\"map\""), std::string::npos);
}

TEST(Cli, OutputsRecordDigestAndSeed) {
  ScratchDir dir;
  run_chain(tiny_config(dir), dir / "out");
  for (const char* name : {"seeds.tsv", "lexicon.tsv", "four_comments.features.tsv",
                           "model.tsv", "run.tsv"}) {
    const std::string text = slurp(dir / "out" / name);
    EXPECT_NE(text.find("config_digest="), std::string::npos) << name;
    EXPECT_NE(text.find("seed=42"), std::string::npos) << name;
  }
}

TEST(Cli, RerunsAreByteIdentical) {
  ScratchDir dir;
  const auto cfg = tiny_config(dir);
  run_chain(cfg, dir / "a");
  run_chain(cfg, dir / "b");
  for (const char* name : {"seeds.tsv", "lexicon.tsv", "four_comments.features.tsv",
                           "model.tsv", "run.tsv", "report.json"}) {
    EXPECT_EQ(slurp(dir / "a" / name), slurp(dir / "b" / name)) << name;
  }
}

TEST(Cli, EvaluatePerfectRun) {
  ScratchDir dir;
  const auto run_path = dir / "run.tsv";
  write_file(run_path,
             "Q1\tQ1_C1\t0\t2\ttrue\nQ1\tQ1_C2\t0\t1\tfalse\n"
             "Q2\tQ2_C1\t0\t2\ttrue\nQ2\tQ2_C2\t0\t1\tfalse\n");
  const Result r = invoke({"evaluate", "--run", run_path.string(), "--gold",
                           data_path("four_comments.jsonl").string(),
                           "--output-dir", dir.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("100.00"), std::string::npos);
}

TEST(Cli, BaselineTimeOnSample) {
  ScratchDir dir;
  const Result r = invoke({"baseline", "time", "--input",
                           data_path("semeval_sample.xml").string(), "--format",
                           "semeval-xml", "--output-dir", dir.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string text = slurp(dir / "baseline-time.tsv");
  EXPECT_NE(text.find("Q268_R4\tQ268_R4_C1\t0\t-1\tfalse"), std::string::npos);
}

TEST(Cli, EmptySeedFileIsDegenerate) {
  ScratchDir dir;
  const auto seeds = dir / "seeds.tsv";
  write_file(seeds, "");
  const Result r = invoke({"bootstrap", "--seeds", seeds.string(), "--unannotated",
                           data_path("four_comments.jsonl").string(),
                           "--output-dir", dir.path().string()});
  EXPECT_EQ(r.code, kExitDegenerate) << r.err;
}

TEST(Cli, MissingInputNamesThePath) {
  ScratchDir dir;
  const std::string missing = (dir / "nope.jsonl").string();
  const Result r = invoke({"induce-seeds", "--train", missing, "--output-dir",
                           dir.path().string()});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find(missing), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"train"}).code, kExitUsage);
  EXPECT_EQ(invoke({"induce-seeds", "--seed-fraction"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  ScratchDir dir;
  EXPECT_EQ(invoke({"induce-seeds", "--output-dir", dir.path().string()}).code,
            kExitUsage);
}

TEST(Cli, InvalidValuesAreDataErrors) {
  ScratchDir dir;
  const Result r = invoke({"induce-seeds", "--train",
                           data_path("four_comments.jsonl").string(),
                           "--seed-fraction", "0", "--output-dir",
                           dir.path().string()});
  EXPECT_EQ(r.code, kExitData);
}

TEST(Cli, FlagsOverrideTheConfig) {
  ScratchDir dir;
  const auto cfg = tiny_config(dir);
  const std::string data = data_path("four_comments.jsonl").string();
  ASSERT_EQ(invoke({"induce-seeds", "--config", cfg.string(), "--output-dir",
                    (dir / "a").string()})
                .code,
            kExitOk);
  ASSERT_EQ(invoke({"induce-seeds", "--config", cfg.string(), "--output-dir",
                    (dir / "b").string(), "--seed", "7"})
                .code,
            kExitOk);
  const std::string a = slurp(dir / "a" / "seeds.tsv");
  const std::string b = slurp(dir / "b" / "seeds.tsv");
  EXPECT_NE(a.find("seed=42"), std::string::npos);
  EXPECT_NE(b.find("seed=7"), std::string::npos);
}

TEST(Config, JsonRoundTripAndDigest) {
  ScratchDir dir;
  PipelineConfig cfg;
  cfg.seed = 9;
  cfg.kmeans_k = 12;
  cfg.propagate_seed();
  EXPECT_EQ(cfg.train.seed, 9u);
  const auto path = dir / "c.json";
  write_file(path, config_to_json(cfg));
  const PipelineConfig back = load_config(path.string());
  EXPECT_EQ(config_to_json(back), config_to_json(cfg));
  PipelineConfig moved = cfg;
  moved.paths.output_dir = "elsewhere";
  EXPECT_EQ(config_digest(moved), config_digest(cfg));
  moved.kmeans_k = 13;
  EXPECT_NE(config_digest(moved), config_digest(cfg));
}

TEST(Config, UnknownKeysAreRejected) {
  ScratchDir dir;
  const auto path = dir / "c.json";
  write_file(path, R"({"kmeans": {"k": 3, "kk": 4}})");
  EXPECT_THROW(load_config(path.string()), ValidationError);
  write_file(path, R"({"typo": 1})");
  EXPECT_THROW(load_config(path.string()), ValidationError);
}

}  // namespace
}  // namespace polarlex::cli
