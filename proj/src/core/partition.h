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


#ifndef RHESIS_CORE_PARTITION_H_
#define RHESIS_CORE_PARTITION_H_

#include <functional>
#include <vector>

namespace rhesis {

// Scores closer than this (relative, floor 1) are ties. Different summation
// orders of the same terms differ only in the last few ulps.
inline constexpr double kScoreTolerance = 1e-9;

// Three-way comparison with the tie tolerance; infinities compare exactly.
int CompareScores(double a, double b);

// Ranking of complete segmentations: higher score, then fewer rhesis, then
// the lexicographically smaller cut list. Returns true if (a) beats (b).
bool BetterPartition(double score_a, const std::vector<int>& cuts_a,
                     double score_b, const std::vector<int>& cuts_b);

struct PartitionResult {
  std::vector<int> cuts;
  double score = 0.0;
};

// Exact maximization over partitions of tokens 1..n into admissible
// segments. term(first, last) is the value a segment contributes, including
// the value of the cut in front of it when first > 1. Segment terms are
// accumulated left to right.
//
// At least the all-singletons partition must be admissible.
PartitionResult BestPartition(
    int n, const std::function<bool(int, int)>& admissible,
    const std::function<double(int, int)>& term);

}  // namespace rhesis

#endif  // RHESIS_CORE_PARTITION_H_
