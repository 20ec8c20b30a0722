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


#ifndef RHESIS_CORE_CORPUS_H_
#define RHESIS_CORE_CORPUS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rhesis {

// One syntactic word of a dependency parse. Indices are 1-based; head 0
// marks the root.
struct Token {
  int index = 0;
  std::string form;
  std::string upos;
  int head = 0;
  std::string deprel;
  std::string misc;

  // False iff MISC carries SpaceAfter=No.
  bool SpaceAfter() const;
};

// An immutable parsed sentence. Construction validates the tree and
// precomputes surface offsets, depths and subtree extents.
class Sentence {
 public:
  // Throws Error(kStructure) naming `id` when the tokens do not form a
  // single-rooted tree with consecutive indices.
  static Sentence Build(std::string id, std::vector<Token> tokens);

  const std::string& id() const { return id_; }
  int size() const { return static_cast<int>(tokens_.size()); }
  const std::vector<Token>& tokens() const { return tokens_; }
  const Token& token(int index) const { return tokens_[index - 1]; }
  const std::string& text() const { return text_; }

  // Surface slice covering tokens first..last inclusive, no outer spaces.
  std::string_view Surface(int first, int last) const;

  // Byte offset of a token's first character within text().
  size_t ByteStart(int index) const { return byte_start_[index - 1]; }
  size_t ByteEnd(int index) const { return byte_end_[index - 1]; }

  int Depth(int index) const { return depth_[index - 1]; }
  int Root() const { return root_; }
  const std::vector<int>& Children(int index) const {
    return children_[index - 1];
  }
  // Smallest and largest token index in the subtree rooted at `index`.
  int SubtreeFirst(int index) const { return subtree_first_[index - 1]; }
  int SubtreeLast(int index) const { return subtree_last_[index - 1]; }

 private:
  std::string id_;
  std::vector<Token> tokens_;
  std::string text_;
  std::vector<size_t> byte_start_;
  std::vector<size_t> byte_end_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> children_;
  std::vector<int> subtree_first_;
  std::vector<int> subtree_last_;
  int root_ = 0;
};

// Reads CoNLL-U. Multiword ranges ("3-4") and empty nodes ("3.1") are
// skipped. Sentence ids come from "# sent_id = ..." or default to
// "s<ordinal>".
std::vector<Sentence> ParseConllu(std::string_view input);

// Writes CoNLL-U with LF line endings. LEMMA, XPOS, FEATS and DEPS are
// emitted as "_".
std::string WriteConllu(std::span<const Sentence> sentences);

// Root has depth 0; every other token is one deeper than its head.
int TokenDepth(const Sentence& sentence, int index);

struct Rhesis {
  int start = 0;  // inclusive token index
  int end = 0;    // inclusive token index
  std::string text;
  bool space_after = false;  // a space separates this rhesis from the next

  int TokenCount() const { return end - start + 1; }
  friend bool operator==(const Rhesis&, const Rhesis&) = default;
};

struct Segmentation {
  std::string sentence_id;
  std::vector<Rhesis> rhesis;
  // One entry per rhesis that exceeds the span because it is a single
  // oversized token.
  std::vector<std::string> warnings;

  // Internal boundaries: i means "between token i and token i+1".
  std::vector<int> Cuts() const;
  int TokenCount() const { return rhesis.empty() ? 0 : rhesis.back().end; }
};

// Builds the segmentation induced by a sorted list of boundary positions.
Segmentation SegmentationFromCuts(const Sentence& sentence,
                                  std::span<const int> cuts);

// Throws Error(kInvalidArgument) unless the rhesis are contiguous,
// non-overlapping, cover 1..n and carry the matching surface text.
void ValidateSegmentation(const Sentence& sentence, const Segmentation& seg);

}  // namespace rhesis

#endif  // RHESIS_CORE_CORPUS_H_
