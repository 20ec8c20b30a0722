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


#include "rhesis/rhesis.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/cascade.h"
#include "core/config.h"
#include "core/corpus.h"
#include "core/dataset.h"
#include "core/error.h"
#include "core/evaluator.h"
#include "core/evo_tuner.h"
#include "core/gold.h"
#include "core/render.h"
#include "core/tree_segmenter.h"
#include "core/weights_io.h"
#include "json.hpp"

struct rhz_config {
  rhesis::EngineConfig cfg;
};

struct rhz_corpus {
  std::shared_ptr<const std::vector<rhesis::Sentence>> sentences;
};

struct rhz_segset {
  std::shared_ptr<const std::vector<rhesis::Sentence>> sentences;
  std::vector<rhesis::Segmentation> segs;
  std::vector<std::string> labels;
  std::vector<std::string> warnings;
};

struct rhz_weights {
  rhesis::ScoringWeights w;
};

struct rhz_scores {
  rhesis::ScoreTable table;
};

namespace {

thread_local std::string g_last_error;

rhz_status StatusFor(rhesis::ErrorKind kind) {
  using rhesis::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument: return RHZ_E_INVALID_ARGUMENT;
    case ErrorKind::kParse: return RHZ_E_PARSE;
    case ErrorKind::kStructure: return RHZ_E_STRUCTURE;
    case ErrorKind::kAlignment: return RHZ_E_ALIGNMENT;
    case ErrorKind::kFormat: return RHZ_E_FORMAT;
    case ErrorKind::kConfig: return RHZ_E_CONFIG;
    case ErrorKind::kIo: return RHZ_E_IO;
  }
  return RHZ_E_INTERNAL;
}

rhz_status Fail(rhz_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
rhz_status Guard(F&& body) {
  try {
    body();
    return RHZ_OK;
  } catch (const rhesis::Error& e) {
    return Fail(StatusFor(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(RHZ_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(RHZ_E_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

std::string_view View(const char* data, size_t len) {
  return data == nullptr ? std::string_view() : std::string_view(data, len);
}

void Require(bool cond, const char* what) {
  if (!cond) {
    throw rhesis::Error(rhesis::ErrorKind::kInvalidArgument, what);
  }
}

void CollectWarnings(rhz_segset* set) {
  set->warnings.clear();
  for (const rhesis::Segmentation& s : set->segs) {
    for (const std::string& w : s.warnings) {
      set->warnings.push_back(s.sentence_id + ": " + w);
    }
  }
}

rhesis::AlignedCorpus ToAligned(const rhz_segset* gold) {
  rhesis::AlignedCorpus corpus;
  for (size_t k = 0; k < gold->segs.size(); ++k) {
    corpus.entries.push_back(
        {(*gold->sentences)[k], gold->segs[k], gold->labels[k]});
  }
  return corpus;
}

}  // namespace

extern "C" {

const char* rhz_version(void) { return "1.0.0"; }

const char* rhz_last_error(void) { return g_last_error.c_str(); }

const char* rhz_status_name(rhz_status status) {
  switch (status) {
    case RHZ_OK: return "ok";
    case RHZ_E_INVALID_ARGUMENT: return "invalid argument";
    case RHZ_E_PARSE: return "parse error";
    case RHZ_E_STRUCTURE: return "structural error";
    case RHZ_E_ALIGNMENT: return "alignment error";
    case RHZ_E_FORMAT: return "format error";
    case RHZ_E_CONFIG: return "config error";
    case RHZ_E_IO: return "i/o error";
    case RHZ_E_INTERNAL: return "internal error";
  }
  return "unknown";
}

void rhz_string_free(char* s) { std::free(s); }

rhz_status rhz_config_new(rhz_config** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = new rhz_config();
  });
}

void rhz_config_free(rhz_config* cfg) { delete cfg; }

rhz_status rhz_config_apply_json(rhz_config* cfg, const char* text,
                                 size_t len) {
  return Guard([&] {
    Require(cfg != nullptr, "null config");
    rhesis::EngineConfig next = cfg->cfg;
    rhesis::ApplyConfigJson(View(text, len), &next);
    cfg->cfg = std::move(next);
  });
}

rhz_status rhz_config_set(rhz_config* cfg, const char* dotted_key,
                          const char* json_value) {
  return Guard([&] {
    Require(cfg != nullptr && dotted_key != nullptr && json_value != nullptr,
            "null argument");
    rhesis::EngineConfig next = cfg->cfg;
    rhesis::SetConfigValue(dotted_key, json_value, &next);
    cfg->cfg = std::move(next);
  });
}

rhz_status rhz_config_to_json(const rhz_config* cfg, char** out) {
  return Guard([&] {
    Require(cfg != nullptr && out != nullptr, "null argument");
    *out = CopyString(rhesis::ConfigToJson(cfg->cfg));
  });
}

rhz_status rhz_config_get_number(const rhz_config* cfg,
                                 const char* dotted_key, double* out) {
  return Guard([&] {
    Require(cfg != nullptr && dotted_key != nullptr && out != nullptr,
            "null argument");
    nlohmann::json j = nlohmann::json::parse(rhesis::ConfigToJson(cfg->cfg));
    std::string pointer = "/" + std::string(dotted_key);
    for (char& c : pointer) {
      if (c == '.') c = '/';
    }
    nlohmann::json::json_pointer ptr(pointer);
    if (!j.contains(ptr) || !j.at(ptr).is_number()) {
      throw rhesis::Error(rhesis::ErrorKind::kConfig,
                          "no numeric setting '" + std::string(dotted_key) +
                              "'");
    }
    *out = j.at(ptr).get<double>();
  });
}

rhz_status rhz_corpus_parse_conllu(const char* data, size_t len,
                                   rhz_corpus** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    auto sentences = std::make_shared<const std::vector<rhesis::Sentence>>(
        rhesis::ParseConllu(View(data, len)));
    *out = new rhz_corpus{std::move(sentences)};
  });
}

void rhz_corpus_free(rhz_corpus* corpus) { delete corpus; }

size_t rhz_corpus_size(const rhz_corpus* corpus) {
  return corpus ? corpus->sentences->size() : 0;
}

rhz_status rhz_segset_align_rhz(const rhz_corpus* corpus, const char* data,
                                size_t len, rhz_segset** out) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "null argument");
    std::vector<rhesis::GoldSentence> gold = rhesis::ParseGold(View(data, len));
    rhesis::AlignedCorpus aligned = rhesis::AlignGold(*corpus->sentences, gold);
    auto set = std::make_unique<rhz_segset>();
    set->sentences = corpus->sentences;
    for (rhesis::AlignedEntry& e : aligned.entries) {
      set->segs.push_back(std::move(e.gold));
      set->labels.push_back(std::move(e.doc_label));
    }
    *out = set.release();
  });
}

rhz_status rhz_segment(const rhz_corpus* corpus, const rhz_config* cfg,
                       rhz_method method, const rhz_weights* weights,
                       const rhz_scores* scores, rhz_segset** out) {
  return Guard([&] {
    Require(corpus != nullptr && cfg != nullptr && out != nullptr,
            "null argument");
    const rhesis::EngineConfig& ec = cfg->cfg;
    auto set = std::make_unique<rhz_segset>();
    set->sentences = corpus->sentences;
    switch (method) {
      case RHZ_METHOD_CASCADE: {
        rhesis::CascadeConfig cc = ec.Cascade();
        for (const rhesis::Sentence& s : *corpus->sentences) {
          set->segs.push_back(
              rhesis::Regroup(s, rhesis::CascadeSegment(s, cc), cc));
        }
        break;
      }
      case RHZ_METHOD_TREE:
        Require(weights != nullptr, "tree segmentation needs weights");
        for (const rhesis::Sentence& s : *corpus->sentences) {
          set->segs.push_back(rhesis::SegmentBest(s, weights->w, ec.span));
        }
        break;
      case RHZ_METHOD_SCORES:
        Require(scores != nullptr, "score segmentation needs a score table");
        for (const rhesis::Sentence& s : *corpus->sentences) {
          set->segs.push_back(rhesis::SegmentByScores(
              s, scores->table, ec.span, ec.tree.score_epsilon));
        }
        break;
      default:
        Require(false, "unknown method");
    }
    set->labels.assign(set->segs.size(), rhesis::kDefaultDocLabel);
    CollectWarnings(set.get());
    *out = set.release();
  });
}

void rhz_segset_free(rhz_segset* set) { delete set; }

size_t rhz_segset_size(const rhz_segset* set) {
  return set ? set->segs.size() : 0;
}

size_t rhz_segset_rhesis_count(const rhz_segset* set) {
  size_t n = 0;
  if (set) {
    for (const rhesis::Segmentation& s : set->segs) n += s.rhesis.size();
  }
  return n;
}

size_t rhz_segset_sentence_rhesis_count(const rhz_segset* set,
                                        size_t sentence) {
  if (!set || sentence >= set->segs.size()) return 0;
  return set->segs[sentence].rhesis.size();
}

rhz_status rhz_segset_rhesis(const rhz_segset* set, size_t sentence, size_t k,
                             int* start, int* end) {
  return Guard([&] {
    Require(set != nullptr && start != nullptr && end != nullptr,
            "null argument");
    Require(sentence < set->segs.size() &&
                k < set->segs[sentence].rhesis.size(),
            "index out of range");
    *start = set->segs[sentence].rhesis[k].start;
    *end = set->segs[sentence].rhesis[k].end;
  });
}

size_t rhz_segset_warning_count(const rhz_segset* set) {
  return set ? set->warnings.size() : 0;
}

const char* rhz_segset_warning(const rhz_segset* set, size_t k) {
  if (!set || k >= set->warnings.size()) return nullptr;
  return set->warnings[k].c_str();
}

rhz_status rhz_segset_render(const rhz_segset* set, rhz_format format,
                             const char* html_class_prefix, int include_ids,
                             char** out) {
  return Guard([&] {
    Require(set != nullptr && out != nullptr, "null argument");
    rhesis::RenderOptions opts;
    switch (format) {
      case RHZ_FORMAT_TEXT: opts.format = rhesis::RenderFormat::kText; break;
      case RHZ_FORMAT_RECORDS:
        opts.format = rhesis::RenderFormat::kRecords;
        break;
      case RHZ_FORMAT_HTML: opts.format = rhesis::RenderFormat::kHtml; break;
      default: Require(false, "unknown format");
    }
    if (html_class_prefix != nullptr) {
      opts.html_class_prefix = html_class_prefix;
    }
    opts.include_ids = include_ids != 0;
    *out = CopyString(rhesis::Render(set->segs, opts));
  });
}

rhz_status rhz_weights_default(rhz_weights** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = new rhz_weights();
  });
}

rhz_status rhz_weights_from_json(const char* text, size_t len,
                                 rhz_weights** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = new rhz_weights{rhesis::WeightsFromJson(View(text, len))};
  });
}

rhz_status rhz_weights_to_json(const rhz_weights* w, char** out) {
  return Guard([&] {
    Require(w != nullptr && out != nullptr, "null argument");
    *out = CopyString(rhesis::WeightsToJson(w->w));
  });
}

void rhz_weights_free(rhz_weights* w) { delete w; }

rhz_status rhz_scores_load(const char* data, size_t len, rhz_scores** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = new rhz_scores{rhesis::LoadScores(View(data, len))};
  });
}

size_t rhz_scores_size(const rhz_scores* scores) {
  return scores ? scores->table.size() : 0;
}

size_t rhz_scores_warning_count(const rhz_scores* scores) {
  return scores ? scores->table.warnings.size() : 0;
}

const char* rhz_scores_warning(const rhz_scores* scores, size_t k) {
  if (!scores || k >= scores->table.warnings.size()) return nullptr;
  return scores->table.warnings[k].c_str();
}

void rhz_scores_free(rhz_scores* scores) { delete scores; }

rhz_status rhz_evaluate(const rhz_segset* automatic, const rhz_segset* gold,
                        char** table, char** report_json) {
  return Guard([&] {
    Require(automatic != nullptr && gold != nullptr, "null argument");
    rhesis::EvalReport report =
        rhesis::EvaluateDocuments(automatic->segs, gold->segs, gold->labels);
    std::string t = report.ToTable();
    std::string j = report.ToJson();
    char* t_out = table ? CopyString(t) : nullptr;
    if (report_json) *report_json = CopyString(j);
    if (table) *table = t_out;
  });
}

rhz_status rhz_evaluate_precision(const rhz_segset* automatic,
                                  const rhz_segset* gold, double* precision,
                                  double* recall, double* f1) {
  return Guard([&] {
    Require(automatic != nullptr && gold != nullptr, "null argument");
    rhesis::PrfResult r = rhesis::RhesisPrecision(automatic->segs, gold->segs);
    if (precision) *precision = r.precision;
    if (recall) *recall = r.recall;
    if (f1) *f1 = r.f1;
  });
}

rhz_status rhz_length_stats(const rhz_segset* set, char** table,
                            char** stats_json) {
  return Guard([&] {
    Require(set != nullptr, "null argument");
    rhesis::LengthStats st = rhesis::ComputeLengthStats(set->segs);
    char* t_out = table ? CopyString(st.ToTable()) : nullptr;
    if (stats_json) *stats_json = CopyString(st.ToJson());
    if (table) *table = t_out;
  });
}

rhz_status rhz_tune(const rhz_segset* gold, const rhz_config* cfg,
                    rhz_weights** out, char** manifest_json) {
  return Guard([&] {
    Require(gold != nullptr && cfg != nullptr && out != nullptr,
            "null argument");
    rhesis::AlignedCorpus corpus = ToAligned(gold);
    rhesis::EvoResult result =
        rhesis::Evolve(corpus, cfg->cfg.evo, cfg->cfg.span);
    std::string manifest =
        rhesis::EvoManifestJson(cfg->cfg.evo, cfg->cfg.span, result);
    auto w = std::make_unique<rhz_weights>(rhz_weights{result.weights});
    if (manifest_json) *manifest_json = CopyString(manifest);
    *out = w.release();
  });
}

rhz_status rhz_export_dataset(const rhz_segset* gold, const rhz_config* cfg,
                              int negatives_per_positive, uint64_t seed,
                              char** tsv, char** manifest_json) {
  return Guard([&] {
    Require(gold != nullptr && cfg != nullptr, "null argument");
    rhesis::AlignedCorpus corpus = ToAligned(gold);
    std::vector<rhesis::CandidateExample> examples = rhesis::ExportCandidates(
        corpus, negatives_per_positive, seed, cfg->cfg.span);
    std::string t = rhesis::CandidatesToTsv(examples);
    std::string m = rhesis::DatasetManifestJson(corpus, examples,
                                                negatives_per_positive, seed);
    char* t_out = tsv ? CopyString(t) : nullptr;
    if (manifest_json) *manifest_json = CopyString(m);
    if (tsv) *tsv = t_out;
  });
}

}  // extern "C"
