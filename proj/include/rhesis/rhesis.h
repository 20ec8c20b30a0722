/* Copyright 2026 The Rhesis Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the rhesis segmentation engine.
 *
 * All objects are opaque handles created by a *_new / *_parse / *_load
 * function and released with the matching *_free (which accepts NULL).
 * Every fallible call returns an rhz_status; on failure the message is
 * available from rhz_last_error() on the calling thread until the next
 * failing call. Strings returned through char** are heap-allocated and owned
 * by the caller; release them with rhz_string_free().
 *
 * Input buffers are UTF-8 and need not be NUL-terminated.
 */

#ifndef RHESIS_RHESIS_H_
#define RHESIS_RHESIS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(RHZ_BUILDING_LIBRARY)
#define RHZ_API __attribute__((visibility("default")))
#else
#define RHZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rhz_status {
  RHZ_OK = 0,
  RHZ_E_INVALID_ARGUMENT = 1,
  RHZ_E_PARSE = 2,     /* malformed CoNLL-U line */
  RHZ_E_STRUCTURE = 3, /* invalid dependency tree */
  RHZ_E_ALIGNMENT = 4, /* rhesis text does not match the parsed sentence */
  RHZ_E_FORMAT = 5,    /* malformed .rhz, score or weight document */
  RHZ_E_CONFIG = 6,
  RHZ_E_IO = 7,
  RHZ_E_INTERNAL = 8
} rhz_status;

typedef enum rhz_method {
  RHZ_METHOD_CASCADE = 0, /* rule cascade followed by regrouping */
  RHZ_METHOD_TREE = 1,    /* scored dependency-tree optimum */
  RHZ_METHOD_SCORES = 2   /* external classifier probabilities */
} rhz_method;

typedef enum rhz_format {
  RHZ_FORMAT_TEXT = 0,    /* .rhz */
  RHZ_FORMAT_RECORDS = 1, /* JSON lines, one per rhesis */
  RHZ_FORMAT_HTML = 2     /* HTML fragment */
} rhz_format;

typedef struct rhz_config rhz_config;
typedef struct rhz_corpus rhz_corpus;
typedef struct rhz_segset rhz_segset;
typedef struct rhz_weights rhz_weights;
typedef struct rhz_scores rhz_scores;

RHZ_API const char* rhz_version(void);
RHZ_API const char* rhz_last_error(void);
RHZ_API const char* rhz_status_name(rhz_status status);
RHZ_API void rhz_string_free(char* s);

/* Configuration: sections span, cascade, tree, evo. */
RHZ_API rhz_status rhz_config_new(rhz_config** out);
RHZ_API void rhz_config_free(rhz_config* cfg);
RHZ_API rhz_status rhz_config_apply_json(rhz_config* cfg, const char* text,
                                         size_t len);
/* json_value is a JSON literal, e.g. "45" or "\"words\"". */
RHZ_API rhz_status rhz_config_set(rhz_config* cfg, const char* dotted_key,
                                  const char* json_value);
RHZ_API rhz_status rhz_config_to_json(const rhz_config* cfg, char** out);
/* Reads a numeric setting such as "span.target_chars". */
RHZ_API rhz_status rhz_config_get_number(const rhz_config* cfg,
                                         const char* dotted_key, double* out);

/* Parsed CoNLL-U sentences. */
RHZ_API rhz_status rhz_corpus_parse_conllu(const char* data, size_t len,
                                           rhz_corpus** out);
RHZ_API void rhz_corpus_free(rhz_corpus* corpus);
RHZ_API size_t rhz_corpus_size(const rhz_corpus* corpus);

/* A segmentation of every sentence of a corpus. The set keeps the corpus
 * data alive on its own; the corpus handle may be freed first. */
RHZ_API rhz_status rhz_segset_align_rhz(const rhz_corpus* corpus,
                                        const char* data, size_t len,
                                        rhz_segset** out);
/* weights is required for RHZ_METHOD_TREE (NULL: defaults are NOT
 * substituted, the call fails); scores is required for RHZ_METHOD_SCORES. */
RHZ_API rhz_status rhz_segment(const rhz_corpus* corpus,
                               const rhz_config* cfg, rhz_method method,
                               const rhz_weights* weights,
                               const rhz_scores* scores, rhz_segset** out);
RHZ_API void rhz_segset_free(rhz_segset* set);
RHZ_API size_t rhz_segset_size(const rhz_segset* set);
RHZ_API size_t rhz_segset_rhesis_count(const rhz_segset* set);
RHZ_API size_t rhz_segset_sentence_rhesis_count(const rhz_segset* set,
                                                size_t sentence);
RHZ_API rhz_status rhz_segset_rhesis(const rhz_segset* set, size_t sentence,
                                     size_t k, int* start, int* end);
RHZ_API size_t rhz_segset_warning_count(const rhz_segset* set);
/* Borrowed pointer, valid while the set lives. */
RHZ_API const char* rhz_segset_warning(const rhz_segset* set, size_t k);
/* html_class_prefix may be NULL ("rhesis"). */
RHZ_API rhz_status rhz_segset_render(const rhz_segset* set, rhz_format format,
                                     const char* html_class_prefix,
                                     int include_ids, char** out);

/* Tree-segmenter weights (JSON weight file). */
RHZ_API rhz_status rhz_weights_default(rhz_weights** out);
RHZ_API rhz_status rhz_weights_from_json(const char* text, size_t len,
                                         rhz_weights** out);
RHZ_API rhz_status rhz_weights_to_json(const rhz_weights* w, char** out);
RHZ_API void rhz_weights_free(rhz_weights* w);

/* Classifier score table (TSV: sentence_id, start, end, probability). */
RHZ_API rhz_status rhz_scores_load(const char* data, size_t len,
                                   rhz_scores** out);
RHZ_API size_t rhz_scores_size(const rhz_scores* scores);
RHZ_API size_t rhz_scores_warning_count(const rhz_scores* scores);
RHZ_API const char* rhz_scores_warning(const rhz_scores* scores, size_t k);
RHZ_API void rhz_scores_free(rhz_scores* scores);

/* Common-rhesis evaluation, documents taken from the gold set's labels.
 * Either output pointer may be NULL. */
RHZ_API rhz_status rhz_evaluate(const rhz_segset* automatic,
                                const rhz_segset* gold, char** table,
                                char** report_json);
RHZ_API rhz_status rhz_evaluate_precision(const rhz_segset* automatic,
                                          const rhz_segset* gold,
                                          double* precision, double* recall,
                                          double* f1);
RHZ_API rhz_status rhz_length_stats(const rhz_segset* set, char** table,
                                    char** stats_json);

/* Evolutionary weight tuning against a gold set, settings from cfg.evo. */
RHZ_API rhz_status rhz_tune(const rhz_segset* gold, const rhz_config* cfg,
                            rhz_weights** out, char** manifest_json);

/* Labeled candidate export for an external classifier. */
RHZ_API rhz_status rhz_export_dataset(const rhz_segset* gold,
                                      const rhz_config* cfg,
                                      int negatives_per_positive,
                                      uint64_t seed, char** tsv,
                                      char** manifest_json);

#ifdef __cplusplus
}
#endif

#endif /* RHESIS_RHESIS_H_ */
