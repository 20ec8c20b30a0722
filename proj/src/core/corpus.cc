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


#include "core/corpus.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "core/error.h"
#include "core/utf8.h"

namespace rhesis {
namespace {

Error StructureError(const std::string& sentence_id, const std::string& what) {
  return Error(ErrorKind::kStructure, "sentence " + sentence_id + ": " + what);
}

bool ParseInt(std::string_view field, int* out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

bool Token::SpaceAfter() const {
  for (std::string_view item : utf8::Split(misc, '|')) {
    if (item == "SpaceAfter=No") return false;
  }
  return true;
}

Sentence Sentence::Build(std::string id, std::vector<Token> tokens) {
  Sentence s;
  s.id_ = std::move(id);
  s.tokens_ = std::move(tokens);
  const int n = s.size();
  if (n == 0) throw StructureError(s.id_, "no tokens");

  int roots = 0;
  for (int i = 1; i <= n; ++i) {
    const Token& t = s.tokens_[i - 1];
    if (t.index != i) {
      throw StructureError(s.id_, "token ids are not consecutive at " +
                                      std::to_string(t.index));
    }
    if (t.head < 0 || t.head > n) {
      throw StructureError(s.id_, "head " + std::to_string(t.head) +
                                      " of token " + std::to_string(i) +
                                      " is out of range");
    }
    if (t.head == i) {
      throw StructureError(s.id_,
                           "token " + std::to_string(i) + " heads itself");
    }
    if (t.deprel.empty()) {
      throw StructureError(s.id_,
                           "token " + std::to_string(i) + " has no deprel");
    }
    if (t.head == 0) {
      ++roots;
      s.root_ = i;
    }
  }
  if (roots != 1) {
    throw StructureError(s.id_, "expected exactly one root, found " +
                                    std::to_string(roots));
  }

  s.depth_.assign(n, -1);
  s.children_.assign(n, {});
  for (int i = 1; i <= n; ++i) {
    int steps = 0;
    int cur = i;
    while (cur != 0 && s.depth_[cur - 1] < 0) {
      cur = s.tokens_[cur - 1].head;
      if (++steps > n) {
        throw StructureError(s.id_, "cycle through token " + std::to_string(i));
      }
    }
    // Walk again, filling depths from the known ancestor downward.
    std::vector<int> path;
    for (int c = i; c != cur; c = s.tokens_[c - 1].head) path.push_back(c);
    int base = cur == 0 ? -1 : s.depth_[cur - 1];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      s.depth_[*it - 1] = ++base;
    }
  }
  for (int i = 1; i <= n; ++i) {
    int h = s.tokens_[i - 1].head;
    if (h != 0) s.children_[h - 1].push_back(i);
  }
  s.subtree_first_.resize(n);
  s.subtree_last_.resize(n);
  for (int i = 1; i <= n; ++i) {
    s.subtree_first_[i - 1] = i;
    s.subtree_last_[i - 1] = i;
  }
  for (int i = 1; i <= n; ++i) {
    for (int a = s.tokens_[i - 1].head; a != 0; a = s.tokens_[a - 1].head) {
      s.subtree_first_[a - 1] = std::min(s.subtree_first_[a - 1], i);
      s.subtree_last_[a - 1] = std::max(s.subtree_last_[a - 1], i);
    }
  }

  s.byte_start_.resize(n);
  s.byte_end_.resize(n);
  for (int i = 1; i <= n; ++i) {
    const Token& t = s.tokens_[i - 1];
    s.byte_start_[i - 1] = s.text_.size();
    s.text_ += t.form;
    s.byte_end_[i - 1] = s.text_.size();
    if (i < n && t.SpaceAfter()) s.text_.push_back(' ');
  }
  return s;
}

std::string_view Sentence::Surface(int first, int last) const {
  size_t b = byte_start_[first - 1];
  size_t e = byte_end_[last - 1];
  return std::string_view(text_).substr(b, e - b);
}

std::vector<Sentence> ParseConllu(std::string_view input) {
  std::vector<Sentence> out;
  std::vector<Token> pending;
  std::string pending_id;
  int line_no = 0;

  auto flush = [&]() {
    if (!pending.empty()) {
      std::string id = pending_id.empty()
                           ? "s" + std::to_string(out.size() + 1)
                           : pending_id;
      out.push_back(Sentence::Build(std::move(id), std::move(pending)));
    }
    pending.clear();
    pending_id.clear();
  };

  std::vector<std::string_view> lines = utf8::Split(input, '\n');
  // A trailing LF produces one empty final element; it is harmless.
  for (std::string_view line : lines) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (utf8::Trim(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      std::string_view body = utf8::Trim(line.substr(1));
      constexpr std::string_view kSentId = "sent_id";
      if (body.substr(0, kSentId.size()) == kSentId) {
        std::string_view rest = utf8::Trim(body.substr(kSentId.size()));
        if (!rest.empty() && rest.front() == '=') {
          pending_id = std::string(utf8::Trim(rest.substr(1)));
        }
      }
      continue;
    }
    std::vector<std::string_view> cols = utf8::Split(line, '\t');
    if (cols.size() != 10) {
      throw ParseError(line_no, "expected 10 tab-separated columns, found " +
                                    std::to_string(cols.size()));
    }
    std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      continue;
    }
    Token t;
    if (!ParseInt(id, &t.index)) {
      throw ParseError(line_no, "bad token id '" + std::string(id) + "'");
    }
    if (!ParseInt(cols[6], &t.head)) {
      throw ParseError(line_no, "bad head '" + std::string(cols[6]) + "'");
    }
    t.form = std::string(cols[1]);
    t.upos = std::string(cols[3]);
    t.deprel = cols[7] == "_" ? std::string() : std::string(cols[7]);
    t.misc = cols[9] == "_" ? std::string() : std::string(cols[9]);
    if (t.form.empty()) throw ParseError(line_no, "empty FORM");
    pending.push_back(std::move(t));
  }
  flush();
  return out;
}

std::string WriteConllu(std::span<const Sentence> sentences) {
  std::ostringstream os;
  for (const Sentence& s : sentences) {
    os << "# sent_id = " << s.id() << "\n";
    os << "# text = " << s.text() << "\n";
    for (const Token& t : s.tokens()) {
      os << t.index << '\t' << t.form << "\t_\t" << t.upos << "\t_\t_\t"
         << t.head << '\t' << t.deprel << "\t_\t"
         << (t.misc.empty() ? "_" : t.misc) << "\n";
    }
    os << "\n";
  }
  return os.str();
}

int TokenDepth(const Sentence& sentence, int index) {
  return sentence.Depth(index);
}

std::vector<int> Segmentation::Cuts() const {
  std::vector<int> cuts;
  for (size_t k = 0; k + 1 < rhesis.size(); ++k) cuts.push_back(rhesis[k].end);
  return cuts;
}

Segmentation SegmentationFromCuts(const Sentence& sentence,
                                  std::span<const int> cuts) {
  Segmentation seg;
  seg.sentence_id = sentence.id();
  int start = 1;
  auto emit = [&](int end) {
    Rhesis r;
    r.start = start;
    r.end = end;
    r.text = std::string(sentence.Surface(start, end));
    r.space_after = end < sentence.size() && sentence.token(end).SpaceAfter();
    seg.rhesis.push_back(std::move(r));
    start = end + 1;
  };
  for (int c : cuts) emit(c);
  emit(sentence.size());
  return seg;
}

void ValidateSegmentation(const Sentence& sentence, const Segmentation& seg) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::kInvalidArgument,
                "segmentation of " + sentence.id() + ": " + what);
  };
  if (seg.rhesis.empty()) fail("no rhesis");
  int expected = 1;
  for (const Rhesis& r : seg.rhesis) {
    if (r.start != expected) fail("gap or overlap at token " +
                                  std::to_string(r.start));
    if (r.end < r.start) fail("inverted rhesis");
    if (r.end > sentence.size()) fail("rhesis past sentence end");
    if (r.text != sentence.Surface(r.start, r.end)) fail("text mismatch");
    expected = r.end + 1;
  }
  if (expected != sentence.size() + 1) fail("does not cover the sentence");
}

}  // namespace rhesis
