// Copyright 2026 The Rhesis Authors.
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


// Command-line front end. Everything goes through the C API.
//
//   rhesis segment --input chapter.conllu --method tree --weights w.json
//   rhesis tune --conllu train.conllu --gold train.rhz --out w.json
//   rhesis eval --auto auto.rhz --gold gold.rhz --conllu book.conllu
//   rhesis export-dataset --conllu c.conllu --gold g.rhz --out cand.tsv
//   rhesis stats --rhz gold.rhz --conllu book.conllu
//
// Exit status: 0 success, 1 usage error, 2 data or format error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rhesis/rhesis.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Data or format failure carrying a message for stderr.
struct DataError {
  std::string message;
};

struct UsageError {
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using ConfigPtr = std::unique_ptr<rhz_config, Deleter<rhz_config, rhz_config_free>>;
using CorpusPtr = std::unique_ptr<rhz_corpus, Deleter<rhz_corpus, rhz_corpus_free>>;
using SegsetPtr = std::unique_ptr<rhz_segset, Deleter<rhz_segset, rhz_segset_free>>;
using WeightsPtr =
    std::unique_ptr<rhz_weights, Deleter<rhz_weights, rhz_weights_free>>;
using ScoresPtr = std::unique_ptr<rhz_scores, Deleter<rhz_scores, rhz_scores_free>>;

void Check(rhz_status status, const std::string& context) {
  if (status == RHZ_OK) return;
  throw DataError{context + ": " + rhz_status_name(status) + ": " +
                  rhz_last_error()};
}

// Takes ownership of a C string returned by the library.
std::string Take(char* s) {
  std::string out = s ? s : "";
  rhz_string_free(s);
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError{"cannot write " + path};
  out << data;
  if (!out) throw DataError{"write failed for " + path};
}

// Options shared by every subcommand that needs an engine configuration.
struct ConfigOptions {
  std::string config_path;
  std::optional<int> span;
};

void AddConfigOptions(CLI::App* cmd, ConfigOptions* opts) {
  cmd->add_option("--config", opts->config_path,
                  "JSON config file (default: $RHESIS_CONFIG)");
  cmd->add_option("--span", opts->span, "maximum rhesis length")
      ->check(CLI::PositiveNumber);
}

ConfigPtr LoadConfig(const ConfigOptions& opts) {
  rhz_config* raw = nullptr;
  Check(rhz_config_new(&raw), "config");
  ConfigPtr cfg(raw);
  std::string path = opts.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("RHESIS_CONFIG")) path = env;
  }
  if (!path.empty()) {
    std::string text = ReadFile(path);
    Check(rhz_config_apply_json(cfg.get(), text.data(), text.size()), path);
  }
  if (opts.span) {
    // Keep the balance target inside a narrower span.
    double target = 0;
    Check(rhz_config_get_number(cfg.get(), "span.target_chars", &target),
          "config");
    std::string max = std::to_string(*opts.span);
    if (target > *opts.span) {
      Check(rhz_config_set(cfg.get(), "span.target_chars", max.c_str()),
            "--span");
    }
    Check(rhz_config_set(cfg.get(), "span.max_chars", max.c_str()), "--span");
  }
  return cfg;
}

void EchoConfig(const std::string& command, const rhz_config* cfg,
                const std::string& extra) {
  char* json = nullptr;
  Check(rhz_config_to_json(cfg, &json), "config");
  std::cerr << "# rhesis " << rhz_version() << " " << command;
  if (!extra.empty()) std::cerr << " " << extra;
  std::cerr << "\n# effective config: " << Take(json) << "\n";
}

CorpusPtr LoadCorpus(const std::string& path) {
  std::string text = ReadFile(path);
  rhz_corpus* raw = nullptr;
  Check(rhz_corpus_parse_conllu(text.data(), text.size(), &raw), path);
  return CorpusPtr(raw);
}

SegsetPtr LoadRhz(const rhz_corpus* corpus, const std::string& path) {
  std::string text = ReadFile(path);
  rhz_segset* raw = nullptr;
  Check(rhz_segset_align_rhz(corpus, text.data(), text.size(), &raw), path);
  return SegsetPtr(raw);
}

struct SegmentArgs {
  ConfigOptions config;
  std::string input;
  std::string method = "cascade";
  std::string weights;
  std::string scores;
  std::string format = "txt";
  std::string out;
  std::string html_prefix = "rhesis";
  bool no_ids = false;
};

int RunSegment(const SegmentArgs& a) {
  rhz_method method = RHZ_METHOD_CASCADE;
  if (a.method == "tree") {
    method = RHZ_METHOD_TREE;
    if (a.weights.empty()) throw UsageError{"--method tree requires --weights"};
  } else if (a.method == "scores") {
    method = RHZ_METHOD_SCORES;
    if (a.scores.empty()) throw UsageError{"--method scores requires --scores"};
  }
  rhz_format format = RHZ_FORMAT_TEXT;
  if (a.format == "records") format = RHZ_FORMAT_RECORDS;
  if (a.format == "html") format = RHZ_FORMAT_HTML;

  ConfigPtr cfg = LoadConfig(a.config);
  EchoConfig("segment", cfg.get(),
             "method=" + a.method + " format=" + a.format);
  CorpusPtr corpus = LoadCorpus(a.input);

  WeightsPtr weights;
  if (method == RHZ_METHOD_TREE) {
    std::string text = ReadFile(a.weights);
    rhz_weights* raw = nullptr;
    Check(rhz_weights_from_json(text.data(), text.size(), &raw), a.weights);
    weights.reset(raw);
  }
  ScoresPtr scores;
  if (method == RHZ_METHOD_SCORES) {
    std::string text = ReadFile(a.scores);
    rhz_scores* raw = nullptr;
    Check(rhz_scores_load(text.data(), text.size(), &raw), a.scores);
    scores.reset(raw);
    for (size_t k = 0; k < rhz_scores_warning_count(scores.get()); ++k) {
      std::cerr << "warning: " << rhz_scores_warning(scores.get(), k) << "\n";
    }
  }

  rhz_segset* raw = nullptr;
  Check(rhz_segment(corpus.get(), cfg.get(), method, weights.get(),
                    scores.get(), &raw),
        "segment");
  SegsetPtr segs(raw);
  for (size_t k = 0; k < rhz_segset_warning_count(segs.get()); ++k) {
    std::cerr << "warning: " << rhz_segset_warning(segs.get(), k) << "\n";
  }
  char* rendered = nullptr;
  Check(rhz_segset_render(segs.get(), format, a.html_prefix.c_str(),
                          a.no_ids ? 0 : 1, &rendered),
        "render");
  WriteOutput(a.out, Take(rendered));
  return kExitOk;
}

struct TuneArgs {
  ConfigOptions config;
  std::string conllu;
  std::string gold;
  std::optional<uint64_t> seed;
  std::optional<int> generations;
  std::string out;
  std::string manifest;
};

int RunTune(const TuneArgs& a) {
  ConfigPtr cfg = LoadConfig(a.config);
  if (a.seed) {
    Check(rhz_config_set(cfg.get(), "evo.seed", std::to_string(*a.seed).c_str()),
          "--seed");
  }
  if (a.generations) {
    Check(rhz_config_set(cfg.get(), "evo.generations",
                         std::to_string(*a.generations).c_str()),
          "--generations");
  }
  EchoConfig("tune", cfg.get(), "");
  CorpusPtr corpus = LoadCorpus(a.conllu);
  SegsetPtr gold = LoadRhz(corpus.get(), a.gold);
  rhz_weights* raw = nullptr;
  char* manifest = nullptr;
  Check(rhz_tune(gold.get(), cfg.get(), &raw, &manifest), "tune");
  WeightsPtr weights(raw);
  std::string manifest_text = Take(manifest);
  char* json = nullptr;
  Check(rhz_weights_to_json(weights.get(), &json), "weights");
  WriteOutput(a.out, Take(json));
  std::string manifest_path =
      !a.manifest.empty() ? a.manifest
                          : (a.out.empty() || a.out == "-" ? std::string()
                                                           : a.out + ".manifest.json");
  if (!manifest_path.empty()) WriteOutput(manifest_path, manifest_text);
  return kExitOk;
}

struct EvalArgs {
  ConfigOptions config;
  std::string automatic;
  std::string gold;
  std::string conllu;
  std::string report;
};

int RunEval(const EvalArgs& a) {
  ConfigPtr cfg = LoadConfig(a.config);
  EchoConfig("eval", cfg.get(), "");
  CorpusPtr corpus = LoadCorpus(a.conllu);
  SegsetPtr gold = LoadRhz(corpus.get(), a.gold);
  SegsetPtr automatic = LoadRhz(corpus.get(), a.automatic);
  char* table = nullptr;
  char* json = nullptr;
  Check(rhz_evaluate(automatic.get(), gold.get(), &table, &json), "eval");
  std::string json_text = Take(json);
  WriteOutput("", Take(table));
  if (!a.report.empty()) WriteOutput(a.report, json_text);
  return kExitOk;
}

struct ExportArgs {
  ConfigOptions config;
  std::string conllu;
  std::string gold;
  int negatives = 2;
  uint64_t seed = 42;
  std::string out;
  std::string manifest;
};

int RunExport(const ExportArgs& a) {
  ConfigPtr cfg = LoadConfig(a.config);
  EchoConfig("export-dataset", cfg.get(),
             "negatives=" + std::to_string(a.negatives) +
                 " seed=" + std::to_string(a.seed));
  CorpusPtr corpus = LoadCorpus(a.conllu);
  SegsetPtr gold = LoadRhz(corpus.get(), a.gold);
  char* tsv = nullptr;
  char* manifest = nullptr;
  Check(rhz_export_dataset(gold.get(), cfg.get(), a.negatives, a.seed, &tsv,
                           &manifest),
        "export-dataset");
  std::string manifest_text = Take(manifest);
  WriteOutput(a.out, Take(tsv));
  std::string manifest_path =
      !a.manifest.empty() ? a.manifest
                          : (a.out.empty() || a.out == "-" ? std::string()
                                                           : a.out + ".manifest.json");
  if (!manifest_path.empty()) WriteOutput(manifest_path, manifest_text);
  return kExitOk;
}

struct StatsArgs {
  ConfigOptions config;
  std::string rhz;
  std::string conllu;
  std::string json;
};

int RunStats(const StatsArgs& a) {
  ConfigPtr cfg = LoadConfig(a.config);
  EchoConfig("stats", cfg.get(), "");
  CorpusPtr corpus = LoadCorpus(a.conllu);
  SegsetPtr segs = LoadRhz(corpus.get(), a.rhz);
  char* table = nullptr;
  char* json = nullptr;
  Check(rhz_length_stats(segs.get(), &table, &json), "stats");
  std::string json_text = Take(json);
  WriteOutput("", Take(table));
  if (!a.json.empty()) WriteOutput(a.json, json_text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segment dependency-parsed text into rhesis (units of meaning)",
               "rhesis"};
  app.require_subcommand(1);

  SegmentArgs seg;
  CLI::App* seg_cmd = app.add_subcommand("segment", "segment a CoNLL-U file");
  seg_cmd->add_option("--input", seg.input, "CoNLL-U input")->required();
  seg_cmd->add_option("--method", seg.method)
      ->check(CLI::IsMember({"cascade", "tree", "scores"}));
  seg_cmd->add_option("--weights", seg.weights, "weight file (tree)");
  seg_cmd->add_option("--scores", seg.scores, "score table (scores)");
  seg_cmd->add_option("--format", seg.format)
      ->check(CLI::IsMember({"txt", "records", "html"}));
  seg_cmd->add_option("--out", seg.out, "output path (default stdout)");
  seg_cmd->add_option("--html-prefix", seg.html_prefix, "HTML class prefix");
  seg_cmd->add_flag("--no-ids", seg.no_ids, "omit HTML ids");
  AddConfigOptions(seg_cmd, &seg.config);

  TuneArgs tune;
  CLI::App* tune_cmd =
      app.add_subcommand("tune", "evolve tree weights against gold rhesis");
  tune_cmd->add_option("--conllu", tune.conllu)->required();
  tune_cmd->add_option("--gold", tune.gold, "gold .rhz")->required();
  tune_cmd->add_option("--seed", tune.seed);
  tune_cmd->add_option("--generations", tune.generations)
      ->check(CLI::NonNegativeNumber);
  tune_cmd->add_option("--out", tune.out, "weight file (default stdout)");
  tune_cmd->add_option("--manifest", tune.manifest,
                       "run manifest (default <out>.manifest.json)");
  AddConfigOptions(tune_cmd, &tune.config);

  EvalArgs eval;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "compare automatic and gold rhesis");
  eval_cmd->add_option("--auto", eval.automatic, "automatic .rhz")->required();
  eval_cmd->add_option("--gold", eval.gold, "gold .rhz")->required();
  eval_cmd->add_option("--conllu", eval.conllu)->required();
  eval_cmd->add_option("--report", eval.report, "JSON report path");
  AddConfigOptions(eval_cmd, &eval.config);

  ExportArgs exp;
  CLI::App* exp_cmd = app.add_subcommand(
      "export-dataset", "export labeled candidates for a classifier");
  exp_cmd->add_option("--conllu", exp.conllu)->required();
  exp_cmd->add_option("--gold", exp.gold, "gold .rhz")->required();
  exp_cmd->add_option("--negatives", exp.negatives, "negatives per positive")
      ->check(CLI::NonNegativeNumber);
  exp_cmd->add_option("--seed", exp.seed);
  exp_cmd->add_option("--out", exp.out, "TSV path (default stdout)");
  exp_cmd->add_option("--manifest", exp.manifest,
                      "manifest (default <out>.manifest.json)");
  AddConfigOptions(exp_cmd, &exp.config);

  StatsArgs stats;
  CLI::App* stats_cmd =
      app.add_subcommand("stats", "rhesis length statistics");
  stats_cmd->add_option("--rhz", stats.rhz)->required();
  stats_cmd->add_option("--conllu", stats.conllu)->required();
  stats_cmd->add_option("--json", stats.json, "JSON output path");
  AddConfigOptions(stats_cmd, &stats.config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*seg_cmd) return RunSegment(seg);
    if (*tune_cmd) return RunTune(tune);
    if (*eval_cmd) return RunEval(eval);
    if (*exp_cmd) return RunExport(exp);
    if (*stats_cmd) return RunStats(stats);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n\n" << app.help();
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitData;
  }
  return kExitUsage;
}
