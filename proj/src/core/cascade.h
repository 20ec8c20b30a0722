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


#ifndef RHESIS_CORE_CASCADE_H_
#define RHESIS_CORE_CASCADE_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.h"
#include "core/span.h"

namespace rhesis {

// Cutting criteria of the rule cascade, in the order they are tried.
enum class CutLevel {
  kPunctuation = 1,
  kClause = 2,
  kPriorityPreposition = 3,
  kChunk = 4,
  kOtherPreposition = 5,
  kWord = 6,
};

inline constexpr int kFirstLevel = 1;
inline constexpr int kLastLevel = 6;

std::string CutLevelName(CutLevel level);

struct TokenRange {
  int first = 1;
  int last = 1;
};

struct CascadeConfig {
  SpanConfig span;
  std::set<std::string> priority_prepositions = {
      "afin", "après", "avant", "chez", "contre",
      "depuis", "malgré", "pendant", "vers"};
  std::set<std::string> clause_deprels = {
      "ccomp", "advcl", "acl", "acl:relcl", "csubj", "parataxis", "conj"};
  std::set<std::string> glue_deprels = {
      "det", "amod", "nummod", "case", "fixed", "flat", "goeswith",
      "aux", "cop", "expl"};
  std::set<std::string> cut_punctuation = {",", ";", ":", "—",
                                           "(", ")", "«", "»"};
};

// True if `deprel` or its base label (text before ':') is in `labels`.
bool LabelIn(const std::set<std::string>& labels, std::string_view deprel);

// Boundaries (i = between token i and i+1) strictly inside `segment` at
// which `level` allows a cut. Sorted, unique.
std::vector<int> FindCutsAtLevel(const Sentence& sentence, TokenRange segment,
                                 CutLevel level, const CascadeConfig& cfg);

// Boundaries between base chunks: every internal boundary except those
// joining two tokens glued by a function-word relation.
std::vector<int> ChunkBoundaries(const Sentence& sentence, TokenRange segment,
                                 const CascadeConfig& cfg);

// Recursive cascade: an oversized segment is cut at every boundary of the
// first productive level, and each piece continues from the next level.
// A single oversized token is emitted as-is with a warning.
Segmentation CascadeSegment(const Sentence& sentence, const CascadeConfig& cfg);

// Greedy left-to-right merge of adjacent rhesis whose union fits the span,
// never across sentence-final punctuation. Idempotent.
Segmentation Regroup(const Sentence& sentence, const Segmentation& seg,
                     const CascadeConfig& cfg);

}  // namespace rhesis

#endif  // RHESIS_CORE_CASCADE_H_
