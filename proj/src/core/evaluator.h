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


#ifndef RHESIS_CORE_EVALUATOR_H_
#define RHESIS_CORE_EVALUATOR_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "core/corpus.h"

namespace rhesis {

struct PrfResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t matches = 0;
  size_t auto_count = 0;
  size_t gold_count = 0;
};

// Common-rhesis rates: an automatic rhesis matches when the same sentence
// has a gold rhesis with identical (start, end). Inputs are parallel lists;
// a sentence-count or token-count mismatch is Error(kInvalidArgument).
PrfResult RhesisPrecision(std::span<const Segmentation> autos,
                          std::span<const Segmentation> golds);

// Rates over internal boundary positions, pooled across sentences. An empty
// predicted (gold) set has precision (recall) 1, so two unsegmented
// sentences score (1, 1, 1).
PrfResult BoundaryPrf(std::span<const Segmentation> autos,
                      std::span<const Segmentation> golds);

struct DocRow {
  std::string label;
  int rhesis_count = 0;  // gold rhesis in the document
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double boundary_precision = 0.0;
  double boundary_recall = 0.0;
  double boundary_f1 = 0.0;
};

struct EvalReport {
  std::vector<DocRow> per_doc;
  int total_count = 0;
  // Averages weighted by gold rhesis count.
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;

  // Aligned text table with one row per document and a weighted-average
  // footer; rates shown as percentages.
  std::string ToTable() const;
  std::string ToJson() const;
};

// Throws Error(kInvalidArgument) on an empty row list, a negative count,
// a zero total or a rate outside [0, 1].
EvalReport CorpusReport(std::span<const DocRow> rows);

// Groups parallel auto/gold lists by document label (first-seen order) and
// reports each document.
EvalReport EvaluateDocuments(std::span<const Segmentation> autos,
                             std::span<const Segmentation> golds,
                             std::span<const std::string> labels);

inline constexpr int kHistogramBucketChars = 5;

struct LengthStats {
  size_t count = 0;
  double mean_chars = 0.0;
  double std_chars = 0.0;
  double mean_words = 0.0;
  double std_words = 0.0;
  // histogram[k] counts rhesis of kHistogramBucketChars*k ..
  // kHistogramBucketChars*(k+1)-1 characters.
  std::vector<size_t> histogram;

  std::string ToTable() const;
  std::string ToJson() const;
};

// Population statistics of rhesis surface lengths. Empty input is
// Error(kInvalidArgument).
LengthStats ComputeLengthStats(std::span<const Segmentation> segs);

}  // namespace rhesis

#endif  // RHESIS_CORE_EVALUATOR_H_
