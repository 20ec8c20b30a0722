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


#include "core/gold.h"

#include "core/error.h"
#include "core/utf8.h"

namespace rhesis {
namespace {

Error AlignmentError(const std::string& sentence_id, size_t offset,
                     const std::string& what) {
  return Error(ErrorKind::kAlignment, "sentence " + sentence_id +
                                          ", offset " +
                                          std::to_string(offset) + ": " + what);
}

}  // namespace

std::vector<GoldSentence> ParseGold(std::string_view input) {
  std::vector<GoldSentence> out;
  std::string label = kDefaultDocLabel;
  GoldSentence current;
  int line_no = 0;

  auto flush = [&]() {
    if (!current.rhesis.empty()) out.push_back(std::move(current));
    current = GoldSentence();
  };

  for (std::string_view line : utf8::Split(input, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      constexpr std::string_view kDoc = "#doc ";
      if (line.substr(0, kDoc.size()) == kDoc) {
        flush();
        label = std::string(utf8::Trim(line.substr(kDoc.size())));
        if (label.empty()) label = kDefaultDocLabel;
      }
      continue;
    }
    std::string_view body = utf8::Trim(line);
    if (body.empty()) {
      if (!current.rhesis.empty()) {
        throw FormatError(line_no, "zero-length rhesis inside a sentence");
      }
      continue;
    }
    if (current.rhesis.empty()) {
      current.doc_label = label;
      current.first_line = line_no;
    }
    current.rhesis.emplace_back(body);
  }
  flush();
  return out;
}

Segmentation AlignRhesis(const Sentence& sentence,
                         std::span<const std::string> rhesis) {
  const int n = sentence.size();
  // Normalized surface plus token boundaries expressed in its offsets.
  std::string norm;
  std::vector<int> starts_at;
  std::vector<int> ends_at;
  std::vector<std::pair<size_t, size_t>> spans(n);
  for (int i = 1; i <= n; ++i) {
    const Token& t = sentence.token(i);
    spans[i - 1].first = norm.size();
    norm += utf8::NormalizeSpaces(t.form);
    spans[i - 1].second = norm.size();
    if (i < n && t.SpaceAfter()) norm.push_back(' ');
  }
  starts_at.assign(norm.size() + 1, 0);
  ends_at.assign(norm.size() + 1, 0);
  for (int i = 1; i <= n; ++i) {
    starts_at[spans[i - 1].first] = i;
    ends_at[spans[i - 1].second] = i;
  }

  Segmentation seg;
  seg.sentence_id = sentence.id();
  size_t pos = 0;
  for (const std::string& raw : rhesis) {
    std::string g = utf8::NormalizeSpaces(raw);
    if (g.empty()) throw AlignmentError(sentence.id(), pos, "empty rhesis");
    if (!seg.rhesis.empty() && pos < norm.size() && norm[pos] == ' ') ++pos;
    if (norm.compare(pos, g.size(), g) != 0) {
      throw AlignmentError(sentence.id(), pos,
                           "text mismatch for rhesis \"" + g + "\"");
    }
    int first = starts_at[pos];
    int last = ends_at[pos + g.size()];
    if (first == 0) {
      throw AlignmentError(sentence.id(), pos,
                           "rhesis starts inside a token");
    }
    if (last == 0) {
      throw AlignmentError(sentence.id(), pos + g.size(),
                           "rhesis ends inside a token");
    }
    Rhesis r;
    r.start = first;
    r.end = last;
    r.text = std::string(sentence.Surface(first, last));
    r.space_after = last < n && sentence.token(last).SpaceAfter();
    seg.rhesis.push_back(std::move(r));
    pos += g.size();
  }
  if (seg.rhesis.empty() || pos != norm.size()) {
    throw AlignmentError(sentence.id(), pos,
                         "rhesis do not cover the whole sentence");
  }
  return seg;
}

AlignedCorpus AlignGold(std::span<const Sentence> sentences,
                        std::span<const GoldSentence> gold) {
  if (sentences.size() != gold.size()) {
    throw Error(ErrorKind::kAlignment,
                "sentence count mismatch: " + std::to_string(sentences.size()) +
                    " parsed vs " + std::to_string(gold.size()) + " gold");
  }
  AlignedCorpus corpus;
  corpus.entries.reserve(sentences.size());
  for (size_t k = 0; k < sentences.size(); ++k) {
    corpus.entries.push_back(
        {sentences[k], AlignRhesis(sentences[k], gold[k].rhesis),
         gold[k].doc_label});
  }
  return corpus;
}

}  // namespace rhesis
