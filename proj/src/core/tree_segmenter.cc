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


#include "core/tree_segmenter.h"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "core/error.h"
#include "core/partition.h"

namespace rhesis {

void ScoringWeights::Validate() const {
  auto check_scalar = [](const char* name, double v) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::kConfig,
                  std::string("weight ") + name + " must be finite and >= 0");
    }
  };
  check_scalar("w_dep", w_dep);
  check_scalar("w_count", w_count);
  check_scalar("w_balance", w_balance);
  check_scalar("w_depth", w_depth);
  check_scalar("w_cross", w_cross);
  auto check_table = [](const std::string& name, double v) {
    if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
      throw Error(ErrorKind::kConfig,
                  "deprel weight " + name + " must lie in [-1, 1]");
    }
  };
  check_table("default", default_deprel_weight);
  for (const auto& [label, v] : deprel_weights) check_table(label, v);
}

double ScoringWeights::Lookup(std::string_view deprel) const {
  auto it = deprel_weights.find(std::string(deprel));
  if (it != deprel_weights.end()) return it->second;
  size_t colon = deprel.find(':');
  if (colon != std::string_view::npos) {
    it = deprel_weights.find(std::string(deprel.substr(0, colon)));
    if (it != deprel_weights.end()) return it->second;
  }
  return default_deprel_weight;
}

CutCandidate CrossingEdges(const Sentence& sentence, int position) {
  CutCandidate cand;
  cand.position = position;
  bool have_primary = false;
  for (const Token& t : sentence.tokens()) {
    if (t.head == 0) continue;
    int lo = std::min(t.head, t.index);
    int hi = std::max(t.head, t.index);
    if (!(lo <= position && position < hi)) continue;
    DependencyEdge edge{t.head, t.index, t.deprel};
    int depth = sentence.Depth(t.index);
    if (!have_primary || depth < cand.depth ||
        (depth == cand.depth && edge.head < cand.primary.head)) {
      cand.primary = edge;
      cand.depth = depth;
      have_primary = true;
    }
    cand.crossing.push_back(std::move(edge));
  }
  return cand;
}

double CutScore(const CutCandidate& cand, const ScoringWeights& w) {
  double crossing_extra =
      cand.crossing.empty() ? 0.0
                            : static_cast<double>(cand.crossing.size() - 1);
  return w.w_dep * w.Lookup(cand.primary.deprel) - w.w_depth * cand.depth -
         w.w_cross * crossing_extra - w.w_count;
}

bool AdmissibleRhesis(const Sentence& sentence, int first, int last,
                      const SpanConfig& span) {
  return first == last || FitsSpan(sentence.Surface(first, last), span);
}

double BalanceTerm(const Sentence& sentence, int first, int last,
                   const ScoringWeights& w, const SpanConfig& span) {
  int len = SpanLength(sentence.Surface(first, last), span);
  return -w.w_balance * std::abs(len - span.target_chars);
}

double SegmentationScore(const Sentence& sentence, const Segmentation& seg,
                         const ScoringWeights& w, const SpanConfig& span) {
  double score = 0.0;
  for (const Rhesis& r : seg.rhesis) {
    double term = BalanceTerm(sentence, r.start, r.end, w, span);
    if (r.start > 1) term += CutScore(CrossingEdges(sentence, r.start - 1), w);
    score += term;
  }
  return score;
}

void AnnotateOversized(const Sentence& sentence, const SpanConfig& span,
                       Segmentation* seg) {
  for (const Rhesis& r : seg->rhesis) {
    if (r.start == r.end && !FitsSpan(r.text, span)) {
      seg->warnings.push_back("token " + std::to_string(r.start) + " of " +
                              sentence.id() + " exceeds the span on its own");
    }
  }
}

Segmentation SegmentBest(const Sentence& sentence, const ScoringWeights& w,
                         const SpanConfig& span) {
  const int n = sentence.size();
  std::vector<double> cut_scores(n + 1, 0.0);
  for (int i = 1; i < n; ++i) {
    cut_scores[i] = CutScore(CrossingEdges(sentence, i), w);
  }
  PartitionResult best = BestPartition(
      n,
      [&](int first, int last) {
        return AdmissibleRhesis(sentence, first, last, span);
      },
      [&](int first, int last) {
        double term = BalanceTerm(sentence, first, last, w, span);
        if (first > 1) term += cut_scores[first - 1];
        return term;
      });
  Segmentation seg = SegmentationFromCuts(sentence, best.cuts);
  AnnotateOversized(sentence, span, &seg);
  return seg;
}

std::vector<Segmentation> EnumerateAll(const Sentence& sentence,
                                       const SpanConfig& span, int cap) {
  const int n = sentence.size();
  if (n > cap) {
    throw Error(ErrorKind::kInvalidArgument,
                "sentence " + sentence.id() + " has " + std::to_string(n) +
                    " tokens; enumeration is capped at " +
                    std::to_string(cap));
  }
  std::vector<Segmentation> out;
  const uint32_t subsets = n > 0 ? (1u << (n - 1)) : 0u;
  for (uint32_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> cuts;
    for (int i = 1; i < n; ++i) {
      if (mask & (1u << (i - 1))) cuts.push_back(i);
    }
    bool ok = true;
    int start = 1;
    for (size_t k = 0; k <= cuts.size() && ok; ++k) {
      int end = k < cuts.size() ? cuts[k] : n;
      ok = AdmissibleRhesis(sentence, start, end, span);
      start = end + 1;
    }
    if (ok) out.push_back(SegmentationFromCuts(sentence, cuts));
  }
  return out;
}

}  // namespace rhesis
