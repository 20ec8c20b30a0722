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


#ifndef RHESIS_CORE_DATASET_H_
#define RHESIS_CORE_DATASET_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "core/gold.h"
#include "core/span.h"

namespace rhesis {

// A (sentence, sub-section) pair for an external rhesis classifier.
struct CandidateExample {
  std::string sentence_id;
  std::string sentence_text;
  int start = 0;
  int end = 0;
  std::string candidate_text;
  int label = 0;  // 1 iff (start, end) is a gold rhesis

  friend bool operator==(const CandidateExample&,
                         const CandidateExample&) = default;
};

// Fine-tuning settings recorded in the export manifest.
struct FineTuneSettings {
  int max_seq_length = 48;
  int mini_batch_size = 16;
  double learning_rate = 2e-5;
  int epochs = 3;
  double heldout_fraction = 1.0 / 3.0;
};

// One positive per gold rhesis; per positive up to `negatives_per_positive`
// near-miss negatives (sharing exactly one boundary with it), topped up from
// random admissible sub-sections when those run out. No duplicate spans, no
// negative equal to a gold span. Output order is a seeded shuffle.
std::vector<CandidateExample> ExportCandidates(const AlignedCorpus& corpus,
                                               int negatives_per_positive,
                                               uint64_t seed,
                                               const SpanConfig& span);

// Header line plus one tab-separated row per example, LF line endings.
std::string CandidatesToTsv(std::span<const CandidateExample> examples);

// Manifest with fine-tuning settings, export parameters, counts and a
// seeded held-out sentence split.
std::string DatasetManifestJson(const AlignedCorpus& corpus,
                                std::span<const CandidateExample> examples,
                                int negatives_per_positive, uint64_t seed,
                                const FineTuneSettings& settings = {});

using ScoreKey = std::tuple<std::string, int, int>;

// Candidate probabilities returned by an external classifier.
struct ScoreTable {
  std::map<ScoreKey, double> probabilities;
  std::vector<std::string> warnings;

  // Probability of a span, or `fallback` when absent.
  double Get(const std::string& sentence_id, int start, int end,
             double fallback) const;
  size_t size() const { return probabilities.size(); }
};

// Records "sentence_id<TAB>start<TAB>end<TAB>probability". An optional
// header starting with "sentence_id" is skipped. Duplicate keys keep the
// last value and add a warning. Malformed rows and probabilities outside
// [0, 1] are Error(kFormat) with the line number.
ScoreTable LoadScores(std::string_view input);

inline constexpr double kDefaultScoreEpsilon = 0.01;

// Sum of log(score) over rhesis, accumulated left to right.
double ScoresObjective(const Sentence& sentence, const Segmentation& seg,
                       const ScoreTable& scores, double epsilon);

// Exact maximizer of ScoresObjective over admissible segmentations. Ties:
// fewest rhesis, then earliest cuts. epsilon must lie in (0, 1).
Segmentation SegmentByScores(const Sentence& sentence,
                             const ScoreTable& scores, const SpanConfig& span,
                             double epsilon = kDefaultScoreEpsilon);

}  // namespace rhesis

#endif  // RHESIS_CORE_DATASET_H_
