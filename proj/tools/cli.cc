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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "polarlex/cooccur.h"
#include "polarlex/digest.h"
#include "polarlex/embeddings.h"
#include "polarlex/error.h"
#include "polarlex/eval.h"
#include "polarlex/features.h"
#include "polarlex/kmeans.h"
#include "polarlex/text_io.h"

namespace polarlex::cli {

namespace fs = std::filesystem;
using nlohmann::json;

void PipelineConfig::propagate_seed() {
  train.seed = seed;
  lda.seed = seed;
  ppmi.seed = seed;
}

namespace {

void reject_unknown_keys(const json& object, std::string_view section,
                         std::initializer_list<std::string_view> known) {
  if (!object.is_object()) {
    throw ValidationError("config: '" + std::string(section) +
                          "' must be an object");
  }
  for (const auto& item : object.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw ValidationError("config: unknown key '" + std::string(section) +
                            "." + item.key() + "'");
    }
  }
}

const json& section(const json& root, const char* name) {
  static const json kEmpty = json::object();
  auto it = root.find(name);
  return it == root.end() ? kEmpty : *it;
}

PipelineConfig config_from_json(const json& root) {
  PipelineConfig cfg;
  reject_unknown_keys(root, "<root>",
                      {"paths", "format", "seed", "smoothing", "bootstrap",
                       "train", "kmeans", "lda", "ppmi"});

  const json& paths = section(root, "paths");
  reject_unknown_keys(paths, "paths",
                      {"train", "dev", "test", "unannotated", "embeddings",
                       "stopwords", "output_dir"});
  auto& p = cfg.paths;
  p.train = paths.value("train", p.train);
  p.dev = paths.value("dev", p.dev);
  p.test = paths.value("test", p.test);
  p.unannotated = paths.value("unannotated", p.unannotated);
  p.embeddings = paths.value("embeddings", p.embeddings);
  p.stopwords = paths.value("stopwords", p.stopwords);
  p.output_dir = paths.value("output_dir", p.output_dir);

  cfg.format = root.value("format", cfg.format);
  cfg.seed = root.value("seed", cfg.seed);

  const json& smoothing = section(root, "smoothing");
  reject_unknown_keys(smoothing, "smoothing", {"alpha", "min_count"});
  auto& sm = cfg.bootstrap.smoothing;
  sm.alpha = smoothing.value("alpha", sm.alpha);
  sm.min_count = smoothing.value("min_count", sm.min_count);

  const json& bootstrap = section(root, "bootstrap");
  reject_unknown_keys(bootstrap, "bootstrap",
                      {"seed_fraction", "pseudo_label_rule"});
  cfg.bootstrap.seed_fraction =
      bootstrap.value("seed_fraction", cfg.bootstrap.seed_fraction);
  if (bootstrap.contains("pseudo_label_rule")) {
    cfg.bootstrap.rule = pseudo_label_rule_from_string(
        bootstrap.at("pseudo_label_rule").get<std::string>());
  }

  const json& train = section(root, "train");
  reject_unknown_keys(train, "train", {"lambda", "epochs"});
  cfg.train.lambda = train.value("lambda", cfg.train.lambda);
  cfg.train.epochs = train.value("epochs", cfg.train.epochs);

  const json& kmeans = section(root, "kmeans");
  reject_unknown_keys(kmeans, "kmeans", {"k", "max_iters"});
  cfg.kmeans_k = kmeans.value("k", cfg.kmeans_k);
  cfg.kmeans_max_iters = kmeans.value("max_iters", cfg.kmeans_max_iters);

  const json& lda = section(root, "lda");
  reject_unknown_keys(lda, "lda",
                      {"num_topics", "alpha_doc", "beta_word", "iterations",
                       "infer_iterations", "include_unannotated"});
  cfg.lda.num_topics = lda.value("num_topics", cfg.lda.num_topics);
  if (lda.contains("alpha_doc") && !lda.at("alpha_doc").is_null()) {
    cfg.lda.alpha_doc = lda.at("alpha_doc").get<double>();
  }
  cfg.lda.beta_word = lda.value("beta_word", cfg.lda.beta_word);
  cfg.lda.iterations = lda.value("iterations", cfg.lda.iterations);
  cfg.lda_infer_iterations =
      lda.value("infer_iterations", cfg.lda_infer_iterations);
  cfg.lda_include_unannotated =
      lda.value("include_unannotated", cfg.lda_include_unannotated);

  const json& ppmi = section(root, "ppmi");
  reject_unknown_keys(ppmi, "ppmi",
                      {"dim", "window", "min_count", "oversample",
                       "power_iterations"});
  cfg.ppmi.dim = ppmi.value("dim", cfg.ppmi.dim);
  cfg.ppmi.window = ppmi.value("window", cfg.ppmi.window);
  cfg.ppmi.min_count = ppmi.value("min_count", cfg.ppmi.min_count);
  cfg.ppmi.oversample = ppmi.value("oversample", cfg.ppmi.oversample);
  cfg.ppmi.power_iterations =
      ppmi.value("power_iterations", cfg.ppmi.power_iterations);
  return cfg;
}

json config_json(const PipelineConfig& cfg) {
  json root;
  root["paths"] = {{"train", cfg.paths.train},
                   {"dev", cfg.paths.dev},
                   {"test", cfg.paths.test},
                   {"unannotated", cfg.paths.unannotated},
                   {"embeddings", cfg.paths.embeddings},
                   {"stopwords", cfg.paths.stopwords},
                   {"output_dir", cfg.paths.output_dir}};
  root["format"] = cfg.format;
  root["seed"] = cfg.seed;
  root["smoothing"] = {{"alpha", cfg.bootstrap.smoothing.alpha},
                       {"min_count", cfg.bootstrap.smoothing.min_count}};
  root["bootstrap"] = {
      {"seed_fraction", cfg.bootstrap.seed_fraction},
      {"pseudo_label_rule", std::string(to_string(cfg.bootstrap.rule))}};
  root["train"] = {{"lambda", cfg.train.lambda}, {"epochs", cfg.train.epochs}};
  root["kmeans"] = {{"k", cfg.kmeans_k}, {"max_iters", cfg.kmeans_max_iters}};
  json alpha = nullptr;
  if (cfg.lda.alpha_doc) alpha = *cfg.lda.alpha_doc;
  root["lda"] = {{"num_topics", cfg.lda.num_topics},
                 {"alpha_doc", alpha},
                 {"beta_word", cfg.lda.beta_word},
                 {"iterations", cfg.lda.iterations},
                 {"infer_iterations", cfg.lda_infer_iterations},
                 {"include_unannotated", cfg.lda_include_unannotated}};
  root["ppmi"] = {{"dim", cfg.ppmi.dim},
                  {"window", cfg.ppmi.window},
                  {"min_count", cfg.ppmi.min_count},
                  {"oversample", cfg.ppmi.oversample},
                  {"power_iterations", cfg.ppmi.power_iterations}};
  return root;
}

}  // namespace

PipelineConfig load_config(const std::string& path) {
  if (!fs::exists(path)) throw IoError("config file not found: " + path);
  std::ifstream in = open_input(path);
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    PipelineConfig cfg = config_from_json(root);
    cfg.propagate_seed();
    return cfg;
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string config_to_json(const PipelineConfig& cfg) {
  return config_json(cfg).dump(2) + "\n";
}

std::string config_digest(const PipelineConfig& cfg) {
  json root = config_json(cfg);
  root["paths"].erase("output_dir");
  return sha256_hex(root.dump());
}

namespace {

// Flag values that take precedence over the config file.
struct Overrides {
  std::string config;
  std::optional<std::string> output_dir;
  std::optional<std::string> format;
  std::optional<std::string> stopwords;
  std::optional<std::string> train_path;
  std::optional<std::string> unannotated;
  std::optional<std::string> embeddings;
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha;
  std::optional<std::int64_t> min_count;
  std::optional<double> seed_fraction;
  std::optional<std::string> rule;
  std::optional<double> lambda;
  std::optional<int> epochs;
  std::optional<int> kmeans_k;
  std::optional<int> topics;
  std::optional<int> lda_iterations;
  std::optional<std::size_t> dim;
};

// Per-subcommand file arguments.
struct Files {
  std::string input;
  std::string seeds;
  std::string lexicon;
  std::string features;
  std::string model;
  std::string run;
  std::string gold;
  std::string out;
  std::string baseline_kind;
};

template <typename T>
void assign(T& target, const std::optional<T>& value) {
  if (value) target = *value;
}

PipelineConfig resolve_config(const Overrides& ov) {
  PipelineConfig cfg = ov.config.empty() ? PipelineConfig{}
                                         : load_config(ov.config);
  assign(cfg.paths.output_dir, ov.output_dir);
  assign(cfg.format, ov.format);
  assign(cfg.paths.stopwords, ov.stopwords);
  assign(cfg.paths.train, ov.train_path);
  assign(cfg.paths.unannotated, ov.unannotated);
  assign(cfg.paths.embeddings, ov.embeddings);
  assign(cfg.seed, ov.seed);
  assign(cfg.bootstrap.smoothing.alpha, ov.alpha);
  assign(cfg.bootstrap.smoothing.min_count, ov.min_count);
  assign(cfg.bootstrap.seed_fraction, ov.seed_fraction);
  if (ov.rule) cfg.bootstrap.rule = pseudo_label_rule_from_string(*ov.rule);
  assign(cfg.train.lambda, ov.lambda);
  assign(cfg.train.epochs, ov.epochs);
  assign(cfg.kmeans_k, ov.kmeans_k);
  assign(cfg.lda.num_topics, ov.topics);
  assign(cfg.lda.iterations, ov.lda_iterations);
  assign(cfg.ppmi.dim, ov.dim);
  cfg.propagate_seed();

  thread_format_from_string(cfg.format);
  cfg.bootstrap.validate();
  cfg.train.validate();
  cfg.lda.validate();
  if (cfg.kmeans_k < 1) throw ValidationError("kmeans.k must be at least 1");
  if (cfg.kmeans_max_iters < 1) {
    throw ValidationError("kmeans.max_iters must be at least 1");
  }
  if (cfg.lda_infer_iterations < 1) {
    throw ValidationError("lda.infer_iterations must be at least 1");
  }
  if (cfg.ppmi.dim < 1 || cfg.ppmi.window < 1) {
    throw ValidationError("ppmi.dim and ppmi.window must be at least 1");
  }
  return cfg;
}

class Command {
 public:
  Command(PipelineConfig cfg, std::string name, std::ostream& out,
          std::ostream& err)
      : cfg_(std::move(cfg)),
        name_(std::move(name)),
        digest_(config_digest(cfg_)),
        out_(out),
        err_(err) {}

  const PipelineConfig& cfg() const { return cfg_; }
  std::ostream& out() { return out_; }

  void log(const std::string& message) {
    err_ << "polarlex " << name_ << ": " << message << '\n';
  }

  std::vector<std::string> notes() const {
    return {"command=" + name_, "config_digest=" + digest_,
            "seed=" + std::to_string(cfg_.seed)};
  }

  fs::path output_path(const std::string& flag,
                       const std::string& default_name) const {
    if (!flag.empty()) return flag;
    return fs::path(cfg_.paths.output_dir) / default_name;
  }

  TokenizerConfig tokenizer() const {
    TokenizerConfig tok;
    tok.stopwords = cfg_.paths.stopwords.empty()
                        ? default_stopwords()
                        : load_stopwords(cfg_.paths.stopwords);
    return tok;
  }

  ThreadFormat format() const { return thread_format_from_string(cfg_.format); }

 private:
  PipelineConfig cfg_;
  std::string name_;
  std::string digest_;
  std::ostream& out_;
  std::ostream& err_;
};

void require_file(const std::string& path, const std::string& what) {
  if (path.empty()) {
    throw Error(ErrorKind::kUsage, what + " path is required");
  }
  if (!fs::is_regular_file(path)) {
    throw IoError(what + " not found: " + path);
  }
}

// Comma-separated lists name several files of the same role.
std::vector<std::string> split_paths(const std::string& list) {
  std::vector<std::string> paths;
  for (std::string_view part : split(list, ',')) {
    if (!part.empty()) paths.emplace_back(part);
  }
  return paths;
}

void require_files(const std::string& list, const std::string& what) {
  const auto paths = split_paths(list);
  if (paths.empty()) throw Error(ErrorKind::kUsage, what + " path is required");
  for (const auto& path : paths) require_file(path, what);
}

std::vector<Thread> read_threads(const std::string& list, ThreadFormat format) {
  std::vector<Thread> threads;
  for (const auto& path : split_paths(list)) {
    auto part = parse_threads(path, format);
    threads.insert(threads.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  return threads;
}

void append_thread_documents(const std::vector<Thread>& threads,
                             const TokenizerConfig& tok,
                             std::vector<std::vector<std::string>>& docs) {
  for (const auto& thread : threads) {
    docs.push_back(tokenize(
        thread.question.subject + "\n" + thread.question.body, tok));
    for (const auto& comment : thread.comments) {
      docs.push_back(tokenize(comment.text, tok));
    }
  }
}

int induce_seeds(Command& cmd, const Files& files) {
  const auto& cfg = cmd.cfg();
  require_files(cfg.paths.train, "training data");
  const auto threads = read_threads(cfg.paths.train, cmd.format());
  const auto tok = cmd.tokenizer();

  std::vector<LabeledTokens> labeled;
  std::size_t unlabeled = 0;
  for (const auto& thread : threads) {
    for (const auto& comment : thread.comments) {
      if (!comment.label) {
        ++unlabeled;
        continue;
      }
      labeled.push_back(
          {tokenize(comment.text, tok), binarize_label(comment.label)});
    }
  }
  if (unlabeled > 0) {
    cmd.log("skipped " + std::to_string(unlabeled) + " unlabeled comments");
  }
  if (labeled.empty()) {
    throw ValidationError("training data has no labeled comments: " +
                          cfg.paths.train);
  }
  const ClassCounts counts = build_counts(labeled);
  const SeedSet seeds = extract_seeds(counts, cfg.bootstrap);
  const fs::path out = cmd.output_path(files.out, "seeds.tsv");
  auto notes = cmd.notes();
  notes.push_back("comments=" + std::to_string(labeled.size()));
  save_seeds(out, seeds, notes);
  cmd.log("wrote " + std::to_string(seeds.good.size()) + " Good and " +
          std::to_string(seeds.bad.size()) + " Bad seeds to " + out.string());
  return kExitOk;
}

int bootstrap(Command& cmd, const Files& files) {
  const auto& cfg = cmd.cfg();
  const std::string seeds_path =
      cmd.output_path(files.seeds, "seeds.tsv").string();
  require_file(seeds_path, "seed file");
  require_files(cfg.paths.unannotated, "unannotated data");

  const SeedSet seeds = load_seeds(seeds_path);
  const auto threads = read_threads(cfg.paths.unannotated, cmd.format());
  const auto tok = cmd.tokenizer();
  std::vector<std::vector<std::string>> comments;
  for (const auto& thread : threads) {
    for (const auto& comment : thread.comments) {
      comments.push_back(tokenize(comment.text, tok));
    }
  }
  GoodnessLexicon lexicon = bootstrap_lexicon(comments, seeds, cfg.bootstrap);
  lexicon.metadata.notes = cmd.notes();
  const fs::path out = cmd.output_path(files.out, "lexicon.tsv");
  save_lexicon(out, lexicon);
  cmd.log("wrote " + std::to_string(lexicon.scores.size()) + " words (" +
          std::to_string(lexicon.num_good()) + " Good, " +
          std::to_string(lexicon.num_bad()) + " Bad) to " + out.string());
  return kExitOk;
}

// Embeddings, clusters, topics and the schema derived from training data.
// They are cached under <output_dir>/resources keyed by a digest of every
// input that determines them.
struct Resources {
  std::shared_ptr<const FeatureSchema> schema;
  std::optional<EmbeddingStore> embeddings;
  std::optional<Clustering> clustering;
  std::optional<TopicModel> topics;
  std::string digest;
};

std::string resource_digest(const PipelineConfig& cfg) {
  json root;
  json train = json::array();
  for (const auto& path : split_paths(cfg.paths.train)) {
    train.push_back(sha256_file(path));
  }
  root["train"] = train;
  json unannotated = json::array();
  for (const auto& path : split_paths(cfg.paths.unannotated)) {
    unannotated.push_back(sha256_file(path));
  }
  root["unannotated"] = unannotated;
  root["embeddings"] = cfg.paths.embeddings.empty()
                           ? std::string()
                           : sha256_file(cfg.paths.embeddings);
  root["stopwords"] = cfg.paths.stopwords.empty()
                          ? std::string("builtin")
                          : sha256_file(cfg.paths.stopwords);
  const json full = config_json(cfg);
  for (const char* key : {"format", "seed", "kmeans", "lda", "ppmi"}) {
    root[key] = full.at(key);
  }
  return sha256_hex(root.dump());
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in = open_input(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.emplace_back(chomp(line));
  return lines;
}

void write_lines(const fs::path& path, const std::vector<std::string>& lines) {
  std::ofstream out = open_output(path);
  for (const auto& line : lines) out << line << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

Resources load_resources(Command& cmd, const fs::path& dir,
                         const std::string& digest) {
  const auto& cfg = cmd.cfg();
  Resources res;
  res.digest = digest;
  res.schema = std::make_shared<const FeatureSchema>(
      read_lines(dir / "categories.txt"));
  res.embeddings = load_embeddings(cfg.paths.embeddings.empty()
                                       ? dir / "embeddings.txt"
                                       : fs::path(cfg.paths.embeddings));
  res.clustering = load_clustering(dir / "clusters.tsv", *res.embeddings);
  res.topics = load_topic_model(dir / "topics.tsv");
  cmd.log("reused cached resources in " + dir.string());
  return res;
}

Resources build_resources(Command& cmd) {
  const auto& cfg = cmd.cfg();
  require_files(cfg.paths.train, "training data");
  if (!cfg.paths.unannotated.empty()) {
    require_files(cfg.paths.unannotated, "unannotated data");
  }
  if (!cfg.paths.embeddings.empty()) {
    require_file(cfg.paths.embeddings, "embeddings");
  }
  if (!cfg.paths.stopwords.empty()) {
    require_file(cfg.paths.stopwords, "stopword list");
  }

  const fs::path dir = fs::path(cfg.paths.output_dir) / "resources";
  const std::string digest = resource_digest(cfg);
  const fs::path manifest = dir / "manifest.txt";
  const std::string manifest_line = "resource_digest=" + digest;
  if (fs::is_regular_file(manifest)) {
    const auto lines = read_lines(manifest);
    if (!lines.empty() && lines.front() == manifest_line) {
      return load_resources(cmd, dir, digest);
    }
  }

  const auto tok = cmd.tokenizer();
  const auto train = read_threads(cfg.paths.train, cmd.format());
  std::vector<Thread> unannotated;
  if (!cfg.paths.unannotated.empty()) {
    unannotated = read_threads(cfg.paths.unannotated, cmd.format());
  }

  Resources res;
  res.digest = digest;
  res.schema = std::make_shared<const FeatureSchema>(
      FeatureSchema::from_threads(train));

  std::vector<std::vector<std::string>> train_docs;
  append_thread_documents(train, tok, train_docs);
  std::vector<std::vector<std::string>> unannotated_docs;
  append_thread_documents(unannotated, tok, unannotated_docs);

  if (cfg.paths.embeddings.empty()) {
    std::vector<std::vector<std::string>> corpus = train_docs;
    corpus.insert(corpus.end(), unannotated_docs.begin(),
                  unannotated_docs.end());
    cmd.log("training PPMI-SVD embeddings on " +
            std::to_string(corpus.size()) + " documents");
    res.embeddings = train_ppmi_svd(corpus, cfg.ppmi);
  } else {
    res.embeddings = load_embeddings(fs::path(cfg.paths.embeddings));
  }
  if (res.embeddings->empty()) {
    throw ValidationError("embedding vocabulary is empty");
  }

  const int k = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(cfg.kmeans_k), res.embeddings->size()));
  if (k < cfg.kmeans_k) {
    cmd.log("clamped k from " + std::to_string(cfg.kmeans_k) + " to " +
            std::to_string(k) + " (vocabulary size)");
  }
  res.clustering = kmeans(*res.embeddings, k, cfg.seed, cfg.kmeans_max_iters);

  std::vector<std::vector<std::string>> lda_docs = train_docs;
  if (cfg.lda_include_unannotated) {
    lda_docs.insert(lda_docs.end(), unannotated_docs.begin(),
                    unannotated_docs.end());
  }
  cmd.log("fitting LDA with " + std::to_string(cfg.lda.num_topics) +
          " topics on " + std::to_string(lda_docs.size()) + " documents");
  res.topics = fit_lda(lda_docs, cfg.lda);

  fs::create_directories(dir);
  fs::remove(manifest);
  write_lines(dir / "categories.txt", res.schema->categories());
  if (cfg.paths.embeddings.empty()) {
    save_embeddings(dir / "embeddings.txt", *res.embeddings);
  }
  save_clustering(dir / "clusters.tsv", *res.clustering);
  save_topic_model(dir / "topics.tsv", *res.topics);
  write_lines(manifest, {manifest_line});
  return res;
}

int featurize_command(Command& cmd, const Files& files) {
  const auto& cfg = cmd.cfg();
  require_files(files.input, "input threads");
  std::optional<GoodnessLexicon> lexicon;
  if (!files.lexicon.empty()) {
    require_file(files.lexicon, "lexicon");
    lexicon = load_lexicon(files.lexicon);
  } else {
    cmd.log("no lexicon given; lexicon features are zero");
  }

  const Resources res = build_resources(cmd);
  const auto threads = read_threads(files.input, cmd.format());

  FeatureContext context;
  context.lexicon = lexicon ? &*lexicon : nullptr;
  context.embeddings = &*res.embeddings;
  context.clustering = &*res.clustering;
  context.topics = &*res.topics;
  context.tokenizer = cmd.tokenizer();
  context.topic_iterations = cfg.lda_infer_iterations;
  context.topic_seed = cfg.seed;

  FeatureTable table;
  table.names = res.schema->names();
  table.rows = featurize(threads, context, res.schema);
  table.notes = cmd.notes();
  table.notes.push_back("schema_digest=" + res.schema->digest());
  table.notes.push_back("resource_digest=" + res.digest);

  const std::string stem =
      fs::path(split_paths(files.input).front()).stem().string();
  const fs::path out = cmd.output_path(files.out, stem + ".features.tsv");
  write_feature_table(out, table);
  cmd.log("wrote " + std::to_string(table.rows.size()) + " rows x " +
          std::to_string(table.names.size()) + " features to " + out.string());
  return kExitOk;
}

int train_command(Command& cmd, const Files& files) {
  require_file(files.features, "feature table");
  const FeatureTable table = read_feature_table(files.features);
  std::vector<Instance> instances;
  for (const auto& row : table.rows) {
    if (!row.label) continue;
    instances.push_back({row.values, binarize_label(row.label)});
  }
  if (instances.empty()) {
    throw ValidationError("feature table has no labeled rows: " +
                          files.features);
  }
  const LinearModel model =
      train(instances, cmd.cfg().train, schema_digest(table.names));
  const fs::path out = cmd.output_path(files.out, "model.tsv");
  save_model(out, model, cmd.notes());
  cmd.log("trained on " + std::to_string(instances.size()) +
          " rows, objective " + format_double(model.objective) + ", wrote " +
          out.string());
  return kExitOk;
}

int predict_command(Command& cmd, const Files& files) {
  const std::string model_path =
      cmd.output_path(files.model, "model.tsv").string();
  require_file(model_path, "model");
  require_file(files.features, "feature table");
  const LinearModel model = load_model(model_path);
  const FeatureTable table = read_feature_table(files.features);
  const std::string digest = schema_digest(table.names);
  if (!model.schema_digest.empty() && model.schema_digest != digest) {
    throw ValidationError("feature schema " + digest +
                          " does not match the model schema " +
                          model.schema_digest);
  }

  // Rows of one question form a thread; row order gives the rank.
  std::vector<std::string> order;
  std::map<std::string, std::vector<RankCandidate>> threads;
  for (const auto& row : table.rows) {
    auto [it, inserted] = threads.try_emplace(row.qid);
    if (inserted) order.push_back(row.qid);
    const int rank = static_cast<int>(it->second.size()) + 1;
    it->second.push_back({row.cid, rank, row.values});
  }
  RunFile run;
  for (const auto& qid : order) {
    RunQuery query{qid, {}};
    for (const auto& scored : rank_thread(model, threads.at(qid))) {
      query.entries.push_back({scored.cid, scored.score, scored.score > 0.0});
    }
    run.push_back(std::move(query));
  }
  const fs::path out = cmd.output_path(files.out, "run.tsv");
  write_run(out, run, cmd.notes());
  cmd.log("scored " + std::to_string(table.rows.size()) + " comments in " +
          std::to_string(run.size()) + " threads, wrote " + out.string());
  return kExitOk;
}

int evaluate_command(Command& cmd, const Files& files) {
  require_file(files.run, "run file");
  require_files(files.gold, "gold threads");
  const RunFile run = read_run(files.run);
  const auto gold = read_threads(files.gold, cmd.format());
  const EvalReport report = evaluate(run, gold);
  cmd.out() << format_report(report);
  const fs::path out = cmd.output_path(files.out, "report.json");
  std::ofstream json_out = open_output(out);
  json_out << report_to_json(report, cmd.notes());
  if (!json_out) throw IoError("write failed: " + out.string());
  cmd.log("wrote " + out.string());
  return kExitOk;
}

int baseline_command(Command& cmd, const Files& files) {
  if (files.baseline_kind != "time" && files.baseline_kind != "random") {
    throw Error(ErrorKind::kUsage, "baseline kind must be time or random, got '" +
                                       files.baseline_kind + "'");
  }
  require_files(files.input, "input threads");
  const auto threads = read_threads(files.input, cmd.format());
  const RunFile run = files.baseline_kind == "time"
                          ? baseline_time(threads)
                          : baseline_random(threads, cmd.cfg().seed);
  const fs::path out =
      cmd.output_path(files.out, "baseline-" + files.baseline_kind + ".tsv");
  write_run(out, run, cmd.notes());
  cmd.log("wrote " + out.string());
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return kExitUsage;
    case ErrorKind::kDegenerate:
      return kExitDegenerate;
    case ErrorKind::kParse:
    case ErrorKind::kValidation:
    case ErrorKind::kOutOfVocabulary:
    case ErrorKind::kIo:
      return kExitData;
  }
  return kExitData;
}

void add_common_options(CLI::App* sub, Overrides& ov) {
  sub->add_option("--config", ov.config, "JSON run configuration")
      ->check(CLI::ExistingFile);
  sub->add_option("--output-dir", ov.output_dir, "Directory for artifacts");
  sub->add_option("--seed", ov.seed, "Global random seed");
  sub->add_option("--format", ov.format, "Thread format: jsonl or semeval-xml");
  sub->add_option("--stopwords", ov.stopwords, "Stopword list, one per line");
}

void add_smoothing_options(CLI::App* sub, Overrides& ov) {
  sub->add_option("--alpha", ov.alpha, "Additive smoothing for PMI");
  sub->add_option("--min-count", ov.min_count,
                  "Minimum document frequency for a scored word");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Goodness polarity lexicons and answer ranking for forum QA",
               "polarlex"};
  app.require_subcommand(1);
  Overrides ov;
  Files files;

  auto* seeds = app.add_subcommand(
      "induce-seeds", "Score annotated comments and extract seed words");
  add_common_options(seeds, ov);
  add_smoothing_options(seeds, ov);
  seeds->add_option("--train", ov.train_path, "Annotated threads");
  seeds->add_option("--seed-fraction", ov.seed_fraction,
                    "Fraction of the vocabulary kept per polarity");
  seeds->add_option("--out", files.out, "Seed TSV");

  auto* boot = app.add_subcommand(
      "bootstrap", "Pseudo-label unannotated comments and build the lexicon");
  add_common_options(boot, ov);
  add_smoothing_options(boot, ov);
  boot->add_option("--seeds", files.seeds, "Seed TSV");
  boot->add_option("--unannotated", ov.unannotated, "Unannotated threads");
  boot->add_option("--rule", ov.rule, "Pseudo-label rule: score-sum or majority");
  boot->add_option("--out", files.out, "Lexicon TSV");

  auto* feat = app.add_subcommand("featurize", "Compute comment features");
  add_common_options(feat, ov);
  feat->add_option("--input", files.input, "Threads to featurize")->required();
  feat->add_option("--lexicon", files.lexicon, "Lexicon TSV");
  feat->add_option("--train", ov.train_path, "Training threads for resources");
  feat->add_option("--unannotated", ov.unannotated,
                   "Extra text for embeddings");
  feat->add_option("--embeddings", ov.embeddings,
                   "Pretrained vectors in word2vec text format");
  feat->add_option("--k", ov.kmeans_k, "Number of word clusters");
  feat->add_option("--topics", ov.topics, "Number of LDA topics");
  feat->add_option("--lda-iterations", ov.lda_iterations, "LDA Gibbs sweeps");
  feat->add_option("--dim", ov.dim, "Dimension of trained embeddings");
  feat->add_option("--out", files.out, "Feature TSV");

  auto* trn = app.add_subcommand("train", "Fit the linear SVM ranker");
  add_common_options(trn, ov);
  trn->add_option("--features", files.features, "Feature TSV")->required();
  trn->add_option("--lambda", ov.lambda, "Regularization strength");
  trn->add_option("--epochs", ov.epochs, "Passes over the data");
  trn->add_option("--out", files.out, "Model file");

  auto* pred = app.add_subcommand("predict", "Score and rank comments");
  add_common_options(pred, ov);
  pred->add_option("--model", files.model, "Model file");
  pred->add_option("--features", files.features, "Feature TSV")->required();
  pred->add_option("--out", files.out, "Run file");

  auto* eval = app.add_subcommand("evaluate", "Score a run against gold labels");
  add_common_options(eval, ov);
  eval->add_option("--run", files.run, "Run file")->required();
  eval->add_option("--gold", files.gold, "Gold threads")->required();
  eval->add_option("--out", files.out, "JSON report");

  auto* base = app.add_subcommand("baseline", "Write a baseline run");
  add_common_options(base, ov);
  base->add_option("kind", files.baseline_kind, "time or random")->required();
  base->add_option("--input", files.input, "Threads to rank")->required();
  base->add_option("--out", files.out, "Run file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    Command cmd(resolve_config(ov), name, out, err);
    if (chosen == seeds) return induce_seeds(cmd, files);
    if (chosen == boot) return bootstrap(cmd, files);
    if (chosen == feat) return featurize_command(cmd, files);
    if (chosen == trn) return train_command(cmd, files);
    if (chosen == pred) return predict_command(cmd, files);
    if (chosen == eval) return evaluate_command(cmd, files);
    return baseline_command(cmd, files);
  } catch (const Error& e) {
    err << "polarlex " << name << ": error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "polarlex " << name << ": error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace polarlex::cli
