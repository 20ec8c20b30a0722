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


#include "core/cascade.h"

#include <algorithm>

#include "core/utf8.h"

namespace rhesis {
namespace {

// Opening brackets and quotes open the following unit, so their cut goes
// before them rather than after.
const std::set<std::string>& OpeningPunctuation() {
  static const std::set<std::string> kOpening = {"(", "[", "{", "«", "“",
                                                 "‘"};
  return kOpening;
}

const std::set<std::string>& SentenceFinalPunctuation() {
  static const std::set<std::string> kFinal = {".", "!", "?", "…", "..."};
  return kFinal;
}

// A conjunct heads a clause when it is verbal or carries its own
// predicate/subject machinery (copular predicates such as "be a robin").
bool IsClausal(const Sentence& s, int index) {
  const Token& t = s.token(index);
  if (t.upos == "VERB" || t.upos == "AUX") return true;
  static const std::set<std::string> kPredicateMarkers = {
      "cop", "nsubj", "nsubj:pass", "csubj", "aux", "aux:pass"};
  for (int child : s.Children(index)) {
    if (LabelIn(kPredicateMarkers, s.token(child).deprel)) return true;
  }
  return false;
}

bool Glued(const Sentence& s, int left, int right,
           const std::set<std::string>& glue) {
  const Token& a = s.token(left);
  const Token& b = s.token(right);
  if (b.head == left && LabelIn(glue, b.deprel)) return true;
  if (a.head == right && LabelIn(glue, a.deprel)) return true;
  return a.head != 0 && a.head == b.head && LabelIn(glue, a.deprel) &&
         LabelIn(glue, b.deprel);
}

void AddCutBefore(int token, TokenRange seg, std::vector<int>* cuts) {
  int boundary = token - 1;
  if (boundary >= seg.first && boundary < seg.last) cuts->push_back(boundary);
}

void AddCutAfter(int token, TokenRange seg, std::vector<int>* cuts) {
  if (token >= seg.first && token < seg.last) cuts->push_back(token);
}

void CascadeRange(const Sentence& s, TokenRange seg, int level,
                  const CascadeConfig& cfg, std::vector<int>* cuts,
                  std::vector<std::string>* warnings) {
  if (FitsSpan(s.Surface(seg.first, seg.last), cfg.span)) return;
  for (int l = level; l <= kLastLevel; ++l) {
    std::vector<int> found =
        FindCutsAtLevel(s, seg, static_cast<CutLevel>(l), cfg);
    if (found.empty()) continue;
    int start = seg.first;
    for (int c : found) {
      CascadeRange(s, {start, c}, l + 1, cfg, cuts, warnings);
      cuts->push_back(c);
      start = c + 1;
    }
    CascadeRange(s, {start, seg.last}, l + 1, cfg, cuts, warnings);
    return;
  }
  // Only a single token can exhaust every level.
  warnings->push_back("token " + std::to_string(seg.first) +
                      " exceeds the span on its own");
}

}  // namespace

std::string CutLevelName(CutLevel level) {
  switch (level) {
    case CutLevel::kPunctuation: return "punctuation";
    case CutLevel::kClause: return "clause";
    case CutLevel::kPriorityPreposition: return "priority_preposition";
    case CutLevel::kChunk: return "chunk";
    case CutLevel::kOtherPreposition: return "other_preposition";
    case CutLevel::kWord: return "word";
  }
  return "unknown";
}

bool LabelIn(const std::set<std::string>& labels, std::string_view deprel) {
  if (labels.count(std::string(deprel))) return true;
  size_t colon = deprel.find(':');
  return colon != std::string_view::npos &&
         labels.count(std::string(deprel.substr(0, colon)));
}

std::vector<int> ChunkBoundaries(const Sentence& sentence, TokenRange segment,
                                 const CascadeConfig& cfg) {
  std::vector<int> cuts;
  for (int i = segment.first; i < segment.last; ++i) {
    if (!Glued(sentence, i, i + 1, cfg.glue_deprels)) cuts.push_back(i);
  }
  return cuts;
}

std::vector<int> FindCutsAtLevel(const Sentence& sentence, TokenRange segment,
                                 CutLevel level, const CascadeConfig& cfg) {
  std::vector<int> cuts;
  switch (level) {
    case CutLevel::kPunctuation:
      for (int t = segment.first; t <= segment.last; ++t) {
        const Token& tok = sentence.token(t);
        if (tok.upos != "PUNCT" || !cfg.cut_punctuation.count(tok.form)) {
          continue;
        }
        if (OpeningPunctuation().count(tok.form)) {
          AddCutBefore(t, segment, &cuts);
        } else {
          AddCutAfter(t, segment, &cuts);
        }
      }
      break;
    case CutLevel::kClause:
      for (int t = segment.first; t <= segment.last; ++t) {
        const Token& tok = sentence.token(t);
        if (tok.upos == "SCONJ") {
          AddCutBefore(t, segment, &cuts);
        } else if (tok.upos == "CCONJ" && tok.head != 0 &&
                   LabelIn({"conj"}, sentence.token(tok.head).deprel) &&
                   IsClausal(sentence, tok.head)) {
          AddCutBefore(t, segment, &cuts);
        }
        if (LabelIn(cfg.clause_deprels, tok.deprel)) {
          // The clause is introduced by the leftmost word of its subtree.
          AddCutBefore(sentence.SubtreeFirst(t), segment, &cuts);
        }
      }
      break;
    case CutLevel::kPriorityPreposition:
    case CutLevel::kOtherPreposition: {
      const bool want_priority = level == CutLevel::kPriorityPreposition;
      for (int t = segment.first; t <= segment.last; ++t) {
        const Token& tok = sentence.token(t);
        if (tok.upos != "ADP") continue;
        bool priority =
            cfg.priority_prepositions.count(utf8::ToLower(tok.form)) > 0;
        if (priority == want_priority) AddCutBefore(t, segment, &cuts);
      }
      break;
    }
    case CutLevel::kChunk:
      cuts = ChunkBoundaries(sentence, segment, cfg);
      break;
    case CutLevel::kWord:
      for (int i = segment.first; i < segment.last; ++i) cuts.push_back(i);
      break;
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

Segmentation CascadeSegment(const Sentence& sentence,
                            const CascadeConfig& cfg) {
  std::vector<int> cuts;
  std::vector<std::string> warnings;
  CascadeRange(sentence, {1, sentence.size()}, kFirstLevel, cfg, &cuts,
               &warnings);
  std::sort(cuts.begin(), cuts.end());
  Segmentation seg = SegmentationFromCuts(sentence, cuts);
  seg.warnings = std::move(warnings);
  return seg;
}

Segmentation Regroup(const Sentence& sentence, const Segmentation& seg,
                     const CascadeConfig& cfg) {
  Segmentation out;
  out.sentence_id = seg.sentence_id;
  out.warnings = seg.warnings;
  out.rhesis = seg.rhesis;
  size_t i = 0;
  while (i + 1 < out.rhesis.size()) {
    const Rhesis& left = out.rhesis[i];
    const Rhesis& right = out.rhesis[i + 1];
    const Token& last = sentence.token(left.end);
    bool final_punct = last.upos == "PUNCT" &&
                       SentenceFinalPunctuation().count(last.form) > 0;
    if (!final_punct &&
        FitsSpan(sentence.Surface(left.start, right.end), cfg.span)) {
      Rhesis merged;
      merged.start = left.start;
      merged.end = right.end;
      merged.text = std::string(sentence.Surface(merged.start, merged.end));
      merged.space_after = right.space_after;
      out.rhesis[i] = std::move(merged);
      out.rhesis.erase(out.rhesis.begin() + static_cast<long>(i) + 1);
      // The grown rhesis cannot now merge leftward: a longer union still
      // exceeds the span.
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace rhesis
