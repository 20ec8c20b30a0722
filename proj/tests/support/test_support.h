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


#ifndef RHESIS_TESTS_SUPPORT_TEST_SUPPORT_H_
#define RHESIS_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/corpus.h"
#include "core/gold.h"
#include "core/span.h"
#include "core/tree_segmenter.h"

#ifndef RHESIS_TEST_DATA_DIR
#define RHESIS_TEST_DATA_DIR "tests/data"
#endif

namespace rhesis::testing {

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string DataPath(const std::string& name) {
  return std::string(RHESIS_TEST_DATA_DIR) + "/" + name;
}

inline Token Tok(int index, std::string form, std::string upos, int head,
                 std::string deprel, std::string misc = "") {
  return Token{index, std::move(form), std::move(upos), head,
               std::move(deprel), std::move(misc)};
}

// Random sentences with valid trees. Forms mix ASCII and accented words,
// commas, the odd glued token and the odd very long token.
class RandomCorpus {
 public:
  explicit RandomCorpus(uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  double Real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  bool Chance(double p) { return Real(0.0, 1.0) < p; }

  Sentence MakeSentence(const std::string& id, int min_tokens = 3,
                        int max_tokens = 12) {
    static const std::vector<std::string> kWords = {
        "le", "chat", "dort", "sur", "la", "table", "été", "forêt",
        "garçon", "vers", "depuis", "et", "mais", "que", "il", "elle",
        "monkey", "robin", "a", "curly", "hair", "because", "noël", "où"};
    static const std::vector<std::string> kUpos = {
        "NOUN", "VERB", "ADP", "DET", "ADJ", "PRON", "CCONJ", "SCONJ",
        "AUX", "ADV"};
    static const std::vector<std::string> kDeprels = {
        "nsubj", "obj", "obl", "det", "amod", "case", "advmod", "conj",
        "cc", "mark", "advcl", "acl:relcl", "nmod", "fixed", "cop", "aux",
        "ccomp", "obl:mod", "xcomp"};
    int n = Uniform(min_tokens, max_tokens);
    // Random tree: attach nodes in a random order to an already-placed node.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng_);
    std::vector<int> head(n + 1, 0);
    for (int k = 1; k < n; ++k) head[order[k]] = order[Uniform(0, k - 1)];
    std::vector<Token> tokens;
    for (int i = 1; i <= n; ++i) {
      std::string form, upos;
      if (Chance(0.1)) {
        form = ",";
        upos = "PUNCT";
      } else if (Chance(0.04)) {
        form = std::string(Uniform(20, 60), 'x');
        upos = "NOUN";
      } else {
        form = kWords[Uniform(0, static_cast<int>(kWords.size()) - 1)];
        upos = kUpos[Uniform(0, static_cast<int>(kUpos.size()) - 1)];
      }
      std::string deprel =
          head[i] == 0 ? "root"
                       : (upos == "PUNCT"
                              ? "punct"
                              : kDeprels[Uniform(
                                    0, static_cast<int>(kDeprels.size()) - 1)]);
      std::string misc = Chance(0.15) ? "SpaceAfter=No" : "";
      tokens.push_back(Tok(i, form, upos, head[i], deprel, misc));
    }
    if (n < max_tokens && Chance(0.5)) {
      tokens.push_back(Tok(n + 1, ".", "PUNCT", order[0], "punct"));
    }
    return Sentence::Build(id, std::move(tokens));
  }

  SpanConfig MakeSpan() {
    SpanConfig span;
    if (Chance(0.2)) {
      span.count_mode = CountMode::kWords;
      span.max_chars = Uniform(1, 8);
    } else {
      span.max_chars = Uniform(8, 50);
    }
    span.target_chars = Uniform(1, span.max_chars);
    return span;
  }

  ScoringWeights MakeWeights() {
    ScoringWeights w;
    w.w_dep = Real(0, 1);
    w.w_count = Real(0, 1);
    w.w_balance = Real(0, 0.2);
    w.w_depth = Real(0, 0.5);
    w.w_cross = Real(0, 0.5);
    for (const char* label : {"nsubj", "obj", "conj", "advcl", "case",
                              "det", "obl", "punct", "mark"}) {
      if (Chance(0.7)) w.deprel_weights[label] = Real(-1, 1);
    }
    w.default_deprel_weight = Chance(0.5) ? 0.0 : Real(-1, 1);
    return w;
  }

  // Any partition of the sentence, feasible or not.
  std::vector<int> MakeCuts(int n) {
    std::vector<int> cuts;
    for (int i = 1; i < n; ++i) {
      if (Chance(0.35)) cuts.push_back(i);
    }
    return cuts;
  }

 private:
  std::mt19937_64 rng_;
};

// Corpus whose gold comes from SegmentBest under hidden weights, so a
// perfect genome exists.
inline AlignedCorpus MakeTeacherCorpus(uint64_t seed, int sentences,
                                       const SpanConfig& span,
                                       ScoringWeights* teacher_out = nullptr) {
  RandomCorpus gen(seed);
  ScoringWeights teacher = gen.MakeWeights();
  teacher.default_deprel_weight = 0.0;
  AlignedCorpus corpus;
  for (int k = 0; k < sentences; ++k) {
    Sentence s = gen.MakeSentence("t" + std::to_string(k + 1), 6, 12);
    Segmentation gold = SegmentBest(s, teacher, span);
    gold.warnings.clear();
    corpus.entries.push_back(
        AlignedEntry{std::move(s), std::move(gold), k < sentences / 2
                                                        ? "first"
                                                        : "second"});
  }
  if (teacher_out != nullptr) *teacher_out = teacher;
  return corpus;
}

// ---------------------------------------------------------------------------
// Reference implementations written from the definitions, sharing no code
// with the library beyond the Sentence accessors for forms and heads.

inline std::string OracleSurface(const Sentence& s, int first, int last) {
  std::string out;
  for (int i = first; i <= last; ++i) {
    const Token& t = s.token(i);
    out += t.form;
    if (i < last && t.misc.find("SpaceAfter=No") == std::string::npos) {
      out += ' ';
    }
  }
  return out;
}

inline int OracleLength(const std::string& text, const SpanConfig& span) {
  if (span.count_mode == CountMode::kWords) {
    std::istringstream in(text);
    std::string w;
    int n = 0;
    while (in >> w) ++n;
    return n;
  }
  int n = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

inline int OracleDepth(const Sentence& s, int index) {
  int d = 0;
  while (s.token(index).head != 0) {
    index = s.token(index).head;
    ++d;
  }
  return d;
}

inline double OracleLookup(const ScoringWeights& w, const std::string& rel) {
  auto it = w.deprel_weights.find(rel);
  if (it != w.deprel_weights.end()) return it->second;
  auto colon = rel.find(':');
  if (colon != std::string::npos) {
    it = w.deprel_weights.find(rel.substr(0, colon));
    if (it != w.deprel_weights.end()) return it->second;
  }
  return w.default_deprel_weight;
}

// Score of the boundary after token `pos`.
inline double OracleCutScore(const Sentence& s, int pos,
                             const ScoringWeights& w) {
  int count = 0;
  int best_dep = 0, best_head = 0, best_depth = 0;
  for (int d = 1; d <= s.size(); ++d) {
    int h = s.token(d).head;
    if (h == 0 || std::min(h, d) > pos || std::max(h, d) <= pos) continue;
    ++count;
    int depth = OracleDepth(s, d);
    bool better = best_dep == 0 || depth < best_depth ||
                  (depth == best_depth && h < best_head);
    if (better) {
      best_dep = d;
      best_head = h;
      best_depth = depth;
    }
  }
  return w.w_dep * OracleLookup(w, s.token(best_dep).deprel) -
         w.w_depth * best_depth - w.w_cross * (count - 1) - w.w_count;
}

inline std::vector<std::pair<int, int>> RangesFromCuts(
    int n, const std::vector<int>& cuts) {
  std::vector<std::pair<int, int>> out;
  int start = 1;
  for (int c : cuts) {
    out.emplace_back(start, c);
    start = c + 1;
  }
  out.emplace_back(start, n);
  return out;
}

inline bool OracleFeasible(const Sentence& s, const std::vector<int>& cuts,
                           const SpanConfig& span) {
  for (auto [a, b] : RangesFromCuts(s.size(), cuts)) {
    if (a != b && OracleLength(OracleSurface(s, a, b), span) > span.max_chars) {
      return false;
    }
  }
  return true;
}

inline double OracleTreeScore(const Sentence& s, const std::vector<int>& cuts,
                              const ScoringWeights& w,
                              const SpanConfig& span) {
  double total = 0.0;
  for (int c : cuts) total += OracleCutScore(s, c, w);
  for (auto [a, b] : RangesFromCuts(s.size(), cuts)) {
    int len = OracleLength(OracleSurface(s, a, b), span);
    total -= w.w_balance * std::abs(len - span.target_chars);
  }
  return total;
}

inline std::vector<std::vector<int>> OracleAllCuts(int n) {
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> cuts;
    for (int i = 1; i < n; ++i) {
      if (mask & (1u << (i - 1))) cuts.push_back(i);
    }
    out.push_back(cuts);
  }
  return out;
}

inline bool OracleNearlyEqual(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= 1e-9 * scale;
}

// Arg-max under (score desc, fewer rhesis, lexicographically smaller cuts).
template <typename ScoreFn>
std::pair<std::vector<int>, double> OracleArgMax(const Sentence& s,
                                                 const SpanConfig& span,
                                                 ScoreFn score) {
  std::vector<int> best;
  double best_score = 0.0;
  bool have = false;
  for (const auto& cuts : OracleAllCuts(s.size())) {
    if (!OracleFeasible(s, cuts, span)) continue;
    double sc = score(cuts);
    bool better = false;
    if (!have) {
      better = true;
    } else if (!OracleNearlyEqual(sc, best_score)) {
      better = sc > best_score;
    } else if (cuts.size() != best.size()) {
      better = cuts.size() < best.size();
    } else {
      better = cuts < best;
    }
    if (better) {
      best = cuts;
      best_score = sc;
      have = true;
    }
  }
  return {best, best_score};
}

}  // namespace rhesis::testing

#endif  // RHESIS_TESTS_SUPPORT_TEST_SUPPORT_H_
