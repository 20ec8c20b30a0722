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


#ifndef RHESIS_CORE_GOLD_H_
#define RHESIS_CORE_GOLD_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.h"

namespace rhesis {

inline constexpr char kDefaultDocLabel[] = "document";

// One sentence of a ".rhz" file: rhesis strings in order, plus the document
// label in effect when the sentence started.
struct GoldSentence {
  std::string doc_label;
  std::vector<std::string> rhesis;
  int first_line = 0;
};

// ".rhz" format: one rhesis per line, blank line between sentences,
// "#doc <label>" switches the document label, other '#' lines are comments.
// A whitespace-only line inside a sentence block is a format error.
std::vector<GoldSentence> ParseGold(std::string_view input);

struct AlignedEntry {
  Sentence sentence;
  Segmentation gold;
  std::string doc_label;
};

struct AlignedCorpus {
  std::vector<AlignedEntry> entries;

  bool empty() const { return entries.empty(); }
  size_t size() const { return entries.size(); }
};

// Maps each rhesis string onto a token span of the matching sentence by a
// left-to-right walk over whitespace-normalized characters.
Segmentation AlignRhesis(const Sentence& sentence,
                         std::span<const std::string> rhesis);

// Throws Error(kAlignment) on count mismatch, character mismatch, or a
// rhesis boundary falling inside a token.
AlignedCorpus AlignGold(std::span<const Sentence> sentences,
                        std::span<const GoldSentence> gold);

}  // namespace rhesis

#endif  // RHESIS_CORE_GOLD_H_
