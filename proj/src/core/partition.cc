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


#include "core/partition.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rhesis {

int CompareScores(double a, double b) {
  if (a == b) return 0;
  if (std::isinf(a) || std::isinf(b)) return a < b ? -1 : 1;
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  if (std::fabs(a - b) <= kScoreTolerance * scale) return 0;
  return a < b ? -1 : 1;
}

bool BetterPartition(double score_a, const std::vector<int>& cuts_a,
                     double score_b, const std::vector<int>& cuts_b) {
  int c = CompareScores(score_a, score_b);
  if (c != 0) return c > 0;
  if (cuts_a.size() != cuts_b.size()) return cuts_a.size() < cuts_b.size();
  return std::lexicographical_compare(cuts_a.begin(), cuts_a.end(),
                                      cuts_b.begin(), cuts_b.end());
}

PartitionResult BestPartition(
    int n, const std::function<bool(int, int)>& admissible,
    const std::function<double(int, int)>& term) {
  struct State {
    bool reachable = false;
    double score = 0.0;
    std::vector<int> cuts;
  };
  // best[j]: best partition of tokens 1..j. Ranking by (score, count, lex)
  // is compatible with extension by a common suffix, so prefix optimality
  // carries over to the full sentence.
  std::vector<State> best(n + 1);
  best[0].reachable = true;
  for (int j = 1; j <= n; ++j) {
    State& cur = best[j];
    for (int i = 0; i < j; ++i) {
      if (!best[i].reachable || !admissible(i + 1, j)) continue;
      double score = best[i].score + term(i + 1, j);
      std::vector<int> cuts = best[i].cuts;
      if (i > 0) cuts.push_back(i);
      if (!cur.reachable || BetterPartition(score, cuts, cur.score, cur.cuts)) {
        cur.reachable = true;
        cur.score = score;
        cur.cuts = std::move(cuts);
      }
    }
  }
  PartitionResult result;
  if (n == 0) return result;
  result.cuts = best[n].cuts;
  result.score = best[n].reachable ? best[n].score
                                   : -std::numeric_limits<double>::infinity();
  return result;
}

}  // namespace rhesis
