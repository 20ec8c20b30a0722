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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "core/cascade.h"
#include "core/corpus.h"
#include "core/dataset.h"
#include "core/evaluator.h"
#include "core/evo_tuner.h"
#include "core/gold.h"
#include "core/partition.h"
#include "core/render.h"
#include "core/tree_segmenter.h"
#include "core/weights_io.h"
#include "json.hpp"
#include "support/test_support.h"

namespace rhesis {
namespace {

using ::rhesis::testing::RandomCorpus;

constexpr uint64_t kSuiteSeed = 20180601;
constexpr int kOracleSentences = 1000;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failure messages.
class Failures {
 public:
  void Add(const std::string& what) {
    if (count_++ < 3) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  int count() const { return count_; }
  std::string Summary() const {
    return std::to_string(count_) + " violation(s): " + messages_;
  }

 private:
  int count_ = 0;
  std::string messages_;
};

std::string Fmt(const char* fmt, double a, double b = 0, double c = 0,
                double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c, d);
  return buf;
}

AlignedCorpus FrenchFixture() {
  auto sentences =
      ParseConllu(testing::ReadFile(testing::DataPath("fixture_fr.conllu")));
  auto gold = ParseGold(testing::ReadFile(testing::DataPath("fixture_fr.rhz")));
  return AlignGold(sentences, gold);
}

double CommonPrecision(const AlignedCorpus& corpus,
                       const std::function<Segmentation(const Sentence&)>& f) {
  std::vector<Segmentation> autos, golds;
  for (const auto& e : corpus.entries) {
    autos.push_back(f(e.sentence));
    golds.push_back(e.gold);
  }
  return RhesisPrecision(autos, golds).precision;
}

// ---------------------------------------------------------------------------

Outcome ReferenceAggregation() {
  const std::vector<int> counts = {1633, 761, 1805, 7989, 6670};
  const std::vector<std::vector<double>> columns = {
      {58.0, 76.7, 65.7, 70.6, 77.6},
      {65.7, 71.3, 71.2, 77.5, 75.6},
      {68.7, 72.7, 72.2, 80.5, 85.5}};
  const std::vector<double> expected = {71.8, 75.0, 80.1};
  std::vector<double> got;
  for (const auto& col : columns) {
    std::vector<DocRow> rows;
    for (size_t i = 0; i < counts.size(); ++i) {
      DocRow r;
      r.label = "doc" + std::to_string(i + 1);
      r.rhesis_count = counts[i];
      r.precision = col[i] / 100.0;
      rows.push_back(r);
    }
    got.push_back(100.0 * CorpusReport(rows).weighted_precision);
  }
  Outcome o;
  for (size_t i = 0; i < got.size(); ++i) {
    o.ok &= std::abs(got[i] - expected[i]) <= 0.05;
  }
  double delta = got[1] - got[0];
  o.ok &= std::abs(delta - 3.2) <= 0.05;
  o.detail = Fmt("weighted %.3f / %.3f / %.3f, delta %.3f", got[0], got[1],
                 got[2], delta);
  return o;
}

// Arg-max over EnumerateAll under the library's tie rules.
std::pair<std::vector<int>, double> EnumeratedBest(
    const Sentence& s, const SpanConfig& span,
    const std::function<double(const Segmentation&)>& score) {
  std::vector<int> best;
  double best_score = 0;
  bool have = false;
  for (const Segmentation& seg : EnumerateAll(s, span)) {
    double v = score(seg);
    std::vector<int> cuts = seg.Cuts();
    if (!have || BetterPartition(v, cuts, best_score, best)) {
      best = cuts;
      best_score = v;
      have = true;
    }
  }
  return {best, best_score};
}

Outcome TreeOracle() {
  RandomCorpus gen(kSuiteSeed);
  Failures f;
  for (int k = 0; k < kOracleSentences; ++k) {
    Sentence s = gen.MakeSentence("o" + std::to_string(k), 3, 12);
    SpanConfig span = gen.MakeSpan();
    ScoringWeights w = gen.MakeWeights();
    Segmentation seg = SegmentBest(s, w, span);
    double got = SegmentationScore(s, seg, w, span);
    auto [enum_cuts, enum_score] = EnumeratedBest(
        s, span, [&](const Segmentation& x) {
          return SegmentationScore(s, x, w, span);
        });
    auto [oracle_cuts, oracle_score] =
        testing::OracleArgMax(s, span, [&](const std::vector<int>& c) {
          return testing::OracleTreeScore(s, c, w, span);
        });
    if (!testing::OracleNearlyEqual(got, enum_score) ||
        seg.Cuts() != enum_cuts) {
      f.Add(s.id() + " differs from enumerate_all");
    }
    if (!testing::OracleNearlyEqual(got, oracle_score) ||
        seg.Cuts() != oracle_cuts) {
      f.Add(s.id() + " differs from reference scorer");
    }
  }
  Outcome o;
  o.ok = f.count() == 0;
  o.detail = o.ok ? std::to_string(kOracleSentences) + "/" +
                        std::to_string(kOracleSentences) + " sentences agree"
                  : f.Summary();
  return o;
}

Outcome ScoresOracle() {
  RandomCorpus gen(kSuiteSeed);
  RandomCorpus tables(kSuiteSeed + 1);
  Failures f;
  for (int k = 0; k < kOracleSentences; ++k) {
    Sentence s = gen.MakeSentence("o" + std::to_string(k), 3, 12);
    SpanConfig span = gen.MakeSpan();
    gen.MakeWeights();  // keep the sentence stream aligned with TreeOracle
    ScoreTable t;
    for (int a = 1; a <= s.size(); ++a) {
      for (int b = a; b <= s.size(); ++b) {
        if (tables.Chance(0.6)) {
          t.probabilities[{s.id(), a, b}] =
              tables.Chance(0.05) ? tables.Uniform(0, 1) : tables.Real(0, 1);
        }
      }
    }
    double eps = tables.Real(0.001, 0.5);
    Segmentation seg = SegmentByScores(s, t, span, eps);
    double got = ScoresObjective(s, seg, t, eps);
    auto [cuts, best] =
        testing::OracleArgMax(s, span, [&](const std::vector<int>& c) {
          double total = 0;
          for (auto [a, b] : testing::RangesFromCuts(s.size(), c)) {
            auto it = t.probabilities.find({s.id(), a, b});
            total += std::log(it == t.probabilities.end() ? eps : it->second);
          }
          return total;
        });
    if (!testing::OracleNearlyEqual(got, best) || seg.Cuts() != cuts) {
      f.Add(s.id());
    }
  }
  Outcome o;
  o.ok = f.count() == 0;
  o.detail = o.ok ? std::to_string(kOracleSentences) + "/" +
                        std::to_string(kOracleSentences) + " sentences agree"
                  : f.Summary();
  return o;
}

Outcome SpanSafety() {
  constexpr int kSentences = 10000;
  RandomCorpus gen(kSuiteSeed + 2);
  Failures f;
  long rhesis = 0, oversized = 0;
  auto check = [&](const Sentence& s, const Segmentation& seg,
                   const SpanConfig& span, const char* method) {
    try {
      ValidateSegmentation(s, seg);
    } catch (const std::exception& e) {
      f.Add(std::string(method) + " " + s.id() + ": " + e.what());
      return;
    }
    for (const Rhesis& r : seg.rhesis) {
      ++rhesis;
      if (FitsSpan(r.text, span)) continue;
      ++oversized;
      bool warned = false;
      for (const auto& w : seg.warnings) {
        warned |= w.find("token " + std::to_string(r.start) + " ") == 0;
      }
      if (r.start != r.end || !warned) {
        f.Add(std::string(method) + " " + s.id() + " rhesis " +
              std::to_string(r.start) + "-" + std::to_string(r.end));
      }
    }
  };
  for (int k = 0; k < kSentences; ++k) {
    Sentence s = gen.MakeSentence("s" + std::to_string(k), 3, 20);
    SpanConfig span = gen.MakeSpan();
    CascadeConfig cc;
    cc.span = span;
    check(s, Regroup(s, CascadeSegment(s, cc), cc), span, "cascade");
    check(s, SegmentBest(s, gen.MakeWeights(), span), span, "tree");
    ScoreTable t;
    for (int a = 1; a <= s.size(); ++a) {
      for (int b = a; b <= s.size(); ++b) {
        if (gen.Chance(0.3)) t.probabilities[{s.id(), a, b}] = gen.Real(0, 1);
      }
    }
    check(s, SegmentByScores(s, t, span), span, "scores");
  }
  Outcome o;
  o.ok = f.count() == 0;
  o.detail = o.ok ? std::to_string(kSentences) + " sentences x 3 methods, " +
                        std::to_string(rhesis) + " rhesis, " +
                        std::to_string(oversized) +
                        " warned single-token exceptions"
                  : f.Summary();
  return o;
}

Outcome RegroupLaws() {
  constexpr int kCases = 1000;
  RandomCorpus gen(kSuiteSeed + 3);
  Failures f;
  int merged = 0;
  for (int k = 0; k < kCases; ++k) {
    Sentence s = gen.MakeSentence("g" + std::to_string(k), 3, 20);
    CascadeConfig cfg;
    cfg.span = gen.MakeSpan();
    Segmentation seg = CascadeSegment(s, cfg);
    Segmentation once = Regroup(s, seg, cfg);
    Segmentation twice = Regroup(s, once, cfg);
    if (once.rhesis.size() > seg.rhesis.size()) f.Add(s.id() + " grew");
    if (twice.rhesis != once.rhesis) f.Add(s.id() + " not idempotent");
    merged += once.rhesis.size() < seg.rhesis.size();
  }
  Outcome o;
  o.ok = f.count() == 0;
  o.detail = o.ok ? std::to_string(kCases) + " cascade outputs, " +
                        std::to_string(merged) + " changed by regrouping"
                  : f.Summary();
  return o;
}

Outcome RoundTrip() {
  constexpr int kCases = 1000;
  RandomCorpus gen(kSuiteSeed + 4);
  std::vector<Sentence> sentences;
  std::vector<Segmentation> segs;
  for (int k = 0; k < kCases; ++k) {
    sentences.push_back(gen.MakeSentence("t" + std::to_string(k), 1, 20));
    segs.push_back(SegmentationFromCuts(
        sentences.back(), gen.MakeCuts(sentences.back().size())));
  }
  Failures f;
  AlignedCorpus back = AlignGold(sentences, ParseGold(RenderText(segs)));
  if (back.size() != segs.size()) f.Add("sentence count changed");
  for (size_t k = 0; k < std::min(back.size(), segs.size()); ++k) {
    if (back.entries[k].gold.rhesis != segs[k].rhesis) f.Add(segs[k].sentence_id);
  }
  Outcome o;
  o.ok = f.count() == 0;
  o.detail = o.ok ? std::to_string(kCases) + " segmentations reproduced"
                  : f.Summary();
  return o;
}

Outcome TunerDeterminism() {
  SpanConfig span;
  AlignedCorpus corpus = testing::MakeTeacherCorpus(kSuiteSeed + 5, 50, span);
  EvoConfig cfg;  // defaults, seed 42
  EvoResult a = Evolve(corpus, cfg, span);
  EvoResult b = Evolve(corpus, cfg, span);
  std::string wa = WeightsToJson(a.weights), wb = WeightsToJson(b.weights);
  Outcome o;
  bool identical = wa == wb && EvoManifestJson(cfg, span, a) ==
                                   EvoManifestJson(cfg, span, b);
  bool monotone = true;
  for (size_t i = 1; i < a.trace.size(); ++i) {
    monotone &= a.trace[i] >= a.trace[i - 1];
  }
  bool improved = a.best_fitness >= a.trace.front();
  o.ok = identical && monotone && improved &&
         a.trace.size() == static_cast<size_t>(cfg.generations + 1);
  o.detail = std::string(identical ? "identical weight files" : "RUNS DIFFER") +
             ", trace " + (monotone ? "non-decreasing" : "DECREASES") +
             Fmt(", fitness %.4f -> %.4f", a.trace.front(), a.best_fitness);
  return o;
}

Outcome MetricMicroChecks() {
  Segmentation gold{"m", {{1, 2, "", true}, {3, 4, "", true}, {5, 6, "", true}}};
  Segmentation autos{"m", {{1, 2, "", true}, {3, 4, "", true}, {4, 6, "", true}}};
  std::vector<Segmentation> g = {gold}, a = {autos};
  PrfResult r = RhesisPrecision(a, g);
  PrfResult id = RhesisPrecision(g, g);
  Sentence s = Sentence::Build(
      "b", {testing::Tok(1, "a", "X", 0, "root"),
            testing::Tok(2, "b", "X", 1, "dep"),
            testing::Tok(3, "c", "X", 1, "dep"),
            testing::Tok(4, "d", "X", 1, "dep"),
            testing::Tok(5, "e", "X", 1, "dep"),
            testing::Tok(6, "f", "X", 1, "dep")});
  std::vector<Segmentation> bg = {SegmentationFromCuts(s, std::vector<int>{2, 5})};
  std::vector<Segmentation> ba = {SegmentationFromCuts(s, std::vector<int>{2})};
  PrfResult br = BoundaryPrf(ba, bg);
  Outcome o;
  o.ok = std::abs(r.precision - 2.0 / 3.0) < 1e-12 && id.precision == 1.0 &&
         id.recall == 1.0 && id.f1 == 1.0 && br.precision == 1.0 &&
         br.recall == 0.5;
  o.detail = Fmt("precision %.4f, identity %.1f, boundary (%.1f, %.1f)",
                 r.precision, id.precision, br.precision, br.recall);
  return o;
}

Outcome ExportIntegrity() {
  AlignedCorpus corpus = FrenchFixture();
  SpanConfig span;
  constexpr int kNegatives = 2;
  constexpr uint64_t kSeed = 42;
  auto ex = ExportCandidates(corpus, kNegatives, kSeed, span);
  auto again = ExportCandidates(corpus, kNegatives, kSeed, span);
  std::string manifest = DatasetManifestJson(corpus, ex, kNegatives, kSeed);
  Failures f;
  std::set<std::tuple<std::string, int, int>> gold;
  for (const auto& e : corpus.entries) {
    for (const auto& r : e.gold.rhesis) gold.insert({e.sentence.id(), r.start, r.end});
  }
  size_t positives = 0;
  for (const auto& e : ex) {
    bool in_gold = gold.count({e.sentence_id, e.start, e.end}) > 0;
    if (e.label == 1) {
      ++positives;
      if (!in_gold) f.Add("positive not in gold");
    } else if (in_gold) {
      f.Add("negative equals gold " + e.sentence_id);
    }
  }
  if (positives != gold.size()) f.Add("positive count");
  if (CandidatesToTsv(ex) != CandidatesToTsv(again) ||
      manifest != DatasetManifestJson(corpus, again, kNegatives, kSeed)) {
    f.Add("not byte-deterministic");
  }
  auto m = nlohmann::json::parse(manifest);
  const auto& ft = m.at("fine_tuning");
  if (ft.at("max_seq_length") != 48 || ft.at("mini_batch_size") != 16 ||
      ft.at("learning_rate").get<double>() != 2e-5 || ft.at("epochs") != 3) {
    f.Add("fine-tuning settings");
  }
  Outcome o;
  o.ok = f.count() == 0;
  o.detail = o.ok ? std::to_string(positives) + " positives, " +
                        std::to_string(ex.size() - positives) +
                        " negatives, manifest 48/16/2e-5/3"
                  : f.Summary();
  return o;
}

Outcome EndToEnd() {
  AlignedCorpus corpus = FrenchFixture();
  SpanConfig span;
  CascadeConfig cc;
  cc.span = span;
  EvoResult tuned = Evolve(corpus, EvoConfig(), span);
  ScoringWeights defaults;
  double p_default = CommonPrecision(
      corpus, [&](const Sentence& s) { return SegmentBest(s, defaults, span); });
  double p_tuned = CommonPrecision(corpus, [&](const Sentence& s) {
    return SegmentBest(s, tuned.weights, span);
  });
  double p_cascade = CommonPrecision(corpus, [&](const Sentence& s) {
    return Regroup(s, CascadeSegment(s, cc), cc);
  });
  Outcome o;
  o.ok = p_tuned > p_default && p_cascade >= 0.5;
  o.detail = Fmt("tree default %.1f%%, tree tuned %.1f%%, cascade+regroup %.1f%%",
                 100 * p_default, 100 * p_tuned, 100 * p_cascade);
  return o;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
  double budget_seconds;
};

int Main() {
  const std::vector<Criterion> criteria = {
      {"reference-row aggregation", ReferenceAggregation, 1},
      {"tree DP oracle equivalence", TreeOracle, 30},
      {"score DP oracle equivalence", ScoresOracle, 30},
      {"span safety", SpanSafety, 120},
      {"regroup properties", RegroupLaws, 30},
      {"text round-trip", RoundTrip, 30},
      {"tuner determinism and monotonicity", TunerDeterminism, 120},
      {"metric micro-checks", MetricMicroChecks, 1},
      {"export integrity", ExportIntegrity, 10},
      {"end-to-end on French fixture", EndToEnd, 120},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      o.detail += Fmt(" (over the %.0f s budget)", c.budget_seconds);
    }
    std::printf("[%s] %s: %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace rhesis

int main() { return rhesis::Main(); }
