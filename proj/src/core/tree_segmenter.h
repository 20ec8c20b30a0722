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


#ifndef RHESIS_CORE_TREE_SEGMENTER_H_
#define RHESIS_CORE_TREE_SEGMENTER_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.h"
#include "core/span.h"

namespace rhesis {

// Weights of the tree-segmentation objective. Scalars are non-negative;
// table entries live in [-1, 1].
struct ScoringWeights {
  double w_dep = 1.0;      // dependency-type criterion
  double w_count = 0.1;    // penalty per cut
  double w_balance = 0.02; // penalty per character of deviation from target
  double w_depth = 0.1;    // penalty per level of cut depth
  double w_cross = 0.1;    // penalty per extra severed edge
  std::map<std::string, double> deprel_weights;
  double default_deprel_weight = 0.0;

  // Throws Error(kConfig) on negative/non-finite scalars or table values
  // outside [-1, 1].
  void Validate() const;

  // Exact label, then its base label (before ':'), then the default.
  double Lookup(std::string_view deprel) const;

  friend bool operator==(const ScoringWeights&,
                         const ScoringWeights&) = default;
};

struct DependencyEdge {
  int head = 0;
  int dependent = 0;
  std::string deprel;

  friend bool operator==(const DependencyEdge&,
                         const DependencyEdge&) = default;
};

// A candidate boundary and the dependency structure it severs.
struct CutCandidate {
  int position = 0;
  std::vector<DependencyEdge> crossing;  // ordered by dependent index
  DependencyEdge primary;  // shallowest dependent; ties -> leftmost head
  int depth = 0;           // depth of primary.dependent
};

// Requires 1 <= position < sentence.size().
CutCandidate CrossingEdges(const Sentence& sentence, int position);

// w_dep * lookup(primary deprel) - w_depth * depth
//   - w_cross * (|crossing| - 1) - w_count.
double CutScore(const CutCandidate& cand, const ScoringWeights& w);

// A rhesis is admissible if it fits the span or is a single token.
bool AdmissibleRhesis(const Sentence& sentence, int first, int last,
                      const SpanConfig& span);

// Value of one rhesis under the balance criterion.
double BalanceTerm(const Sentence& sentence, int first, int last,
                   const ScoringWeights& w, const SpanConfig& span);

// Objective value of a segmentation: cut scores minus balance penalties,
// accumulated rhesis by rhesis from the left.
double SegmentationScore(const Sentence& sentence, const Segmentation& seg,
                         const ScoringWeights& w, const SpanConfig& span);

// Exact optimum of SegmentationScore over admissible segmentations, by
// dynamic programming over boundary positions. Ties: fewest rhesis, then
// lexicographically earliest cuts.
Segmentation SegmentBest(const Sentence& sentence, const ScoringWeights& w,
                         const SpanConfig& span);

inline constexpr int kDefaultOracleCap = 16;

// Every admissible segmentation (test oracle). Refuses sentences longer than
// `cap` tokens with Error(kInvalidArgument).
std::vector<Segmentation> EnumerateAll(const Sentence& sentence,
                                       const SpanConfig& span,
                                       int cap = kDefaultOracleCap);

// Adds a warning for each single-token rhesis that exceeds the span.
void AnnotateOversized(const Sentence& sentence, const SpanConfig& span,
                       Segmentation* seg);

}  // namespace rhesis

#endif  // RHESIS_CORE_TREE_SEGMENTER_H_
