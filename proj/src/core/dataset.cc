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


#include "core/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "core/error.h"
#include "core/partition.h"
#include "core/tree_segmenter.h"
#include "core/utf8.h"
#include "json.hpp"

namespace rhesis {
namespace {

std::string TsvField(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

CandidateExample MakeExample(const Sentence& s, int start, int end,
                             int label) {
  return {s.id(), s.text(), start, end, std::string(s.Surface(start, end)),
          label};
}

}  // namespace

std::vector<CandidateExample> ExportCandidates(const AlignedCorpus& corpus,
                                               int negatives_per_positive,
                                               uint64_t seed,
                                               const SpanConfig& span) {
  if (corpus.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "export needs a gold corpus");
  }
  if (negatives_per_positive < 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "negatives per positive must be >= 0");
  }
  std::mt19937_64 rng(seed);
  std::vector<CandidateExample> out;
  for (const AlignedEntry& e : corpus.entries) {
    const Sentence& s = e.sentence;
    const int n = s.size();
    std::set<std::pair<int, int>> gold;
    for (const Rhesis& r : e.gold.rhesis) gold.insert({r.start, r.end});
    std::set<std::pair<int, int>> used;
    auto usable = [&](int a, int b) {
      return !gold.count({a, b}) && !used.count({a, b}) &&
             AdmissibleRhesis(s, a, b, span);
    };

    for (const Rhesis& r : e.gold.rhesis) {
      out.push_back(MakeExample(s, r.start, r.end, 1));
      if (negatives_per_positive == 0) continue;

      std::vector<std::pair<int, int>> near;
      for (int b = r.start; b <= n; ++b) {
        if (b != r.end) near.push_back({r.start, b});
      }
      for (int a = 1; a <= r.end; ++a) {
        if (a != r.start) near.push_back({a, r.end});
      }
      std::shuffle(near.begin(), near.end(), rng);
      int taken = 0;
      for (auto [a, b] : near) {
        if (taken == negatives_per_positive) break;
        if (!usable(a, b)) continue;
        used.insert({a, b});
        out.push_back(MakeExample(s, a, b, 0));
        ++taken;
      }
      if (taken == negatives_per_positive) continue;

      std::vector<std::pair<int, int>> any;
      for (int a = 1; a <= n; ++a) {
        for (int b = a; b <= n; ++b) any.push_back({a, b});
      }
      std::shuffle(any.begin(), any.end(), rng);
      for (auto [a, b] : any) {
        if (taken == negatives_per_positive) break;
        if (!usable(a, b)) continue;
        used.insert({a, b});
        out.push_back(MakeExample(s, a, b, 0));
        ++taken;
      }
    }
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

std::string CandidatesToTsv(std::span<const CandidateExample> examples) {
  std::ostringstream os;
  os << "sentence_id\tsentence_text\tstart\tend\tcandidate_text\tlabel\n";
  for (const CandidateExample& ex : examples) {
    os << TsvField(ex.sentence_id) << '\t' << TsvField(ex.sentence_text)
       << '\t' << ex.start << '\t' << ex.end << '\t'
       << TsvField(ex.candidate_text) << '\t' << ex.label << '\n';
  }
  return os.str();
}

std::string DatasetManifestJson(const AlignedCorpus& corpus,
                                std::span<const CandidateExample> examples,
                                int negatives_per_positive, uint64_t seed,
                                const FineTuneSettings& settings) {
  size_t positives = 0;
  for (const CandidateExample& ex : examples) positives += ex.label;

  std::vector<std::string> ids;
  for (const AlignedEntry& e : corpus.entries) ids.push_back(e.sentence.id());
  // A separate stream keeps the split independent of the export sampling.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::shuffle(ids.begin(), ids.end(), rng);
  size_t heldout = static_cast<size_t>(
      std::llround(settings.heldout_fraction * double(ids.size())));
  std::vector<std::string> held(ids.begin(), ids.begin() + long(heldout));
  std::sort(held.begin(), held.end());

  nlohmann::ordered_json j;
  nlohmann::ordered_json ft;
  ft["max_seq_length"] = settings.max_seq_length;
  ft["mini_batch_size"] = settings.mini_batch_size;
  ft["learning_rate"] = settings.learning_rate;
  ft["epochs"] = settings.epochs;
  j["fine_tuning"] = ft;
  nlohmann::ordered_json split;
  split["heldout_fraction"] = settings.heldout_fraction;
  split["note"] = "about one third of the sentences is held out for evaluation";
  split["heldout_sentence_ids"] = held;
  j["split"] = split;
  j["seed"] = seed;
  j["negatives_per_positive"] = negatives_per_positive;
  j["sentences"] = corpus.size();
  j["examples"] = examples.size();
  j["positives"] = positives;
  j["negatives"] = examples.size() - positives;
  j["columns"] = {"sentence_id", "sentence_text", "start",
                  "end",         "candidate_text", "label"};
  return j.dump(2) + "\n";
}

double ScoreTable::Get(const std::string& sentence_id, int start, int end,
                       double fallback) const {
  auto it = probabilities.find({sentence_id, start, end});
  return it == probabilities.end() ? fallback : it->second;
}

ScoreTable LoadScores(std::string_view input) {
  ScoreTable table;
  int line_no = 0;
  bool seen_data = false;
  for (std::string_view line : utf8::Split(input, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (utf8::Trim(line).empty()) continue;
    std::vector<std::string_view> f = utf8::Split(line, '\t');
    if (!seen_data && f[0] == "sentence_id") {
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (f.size() != 4) {
      throw FormatError(line_no, "expected 4 tab-separated fields");
    }
    int start = 0, end = 0;
    auto int_ok = [](std::string_view s, int* v) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), *v);
      return ec == std::errc() && p == s.data() + s.size();
    };
    if (!int_ok(f[1], &start) || !int_ok(f[2], &end) || start < 1 ||
        end < start) {
      throw FormatError(line_no, "bad token span");
    }
    double prob = 0;
    std::string pstr(f[3]);
    try {
      size_t used = 0;
      prob = std::stod(pstr, &used);
      if (used != pstr.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw FormatError(line_no, "bad probability '" + pstr + "'");
    }
    if (!(prob >= 0.0 && prob <= 1.0)) {
      throw FormatError(line_no, "probability " + pstr + " outside [0, 1]");
    }
    ScoreKey key{std::string(f[0]), start, end};
    auto [it, inserted] = table.probabilities.insert_or_assign(key, prob);
    if (!inserted) {
      table.warnings.push_back("line " + std::to_string(line_no) +
                               ": duplicate score for " + std::string(f[0]) +
                               " " + std::to_string(start) + "-" +
                               std::to_string(end) + ", keeping the last");
    }
  }
  return table;
}

double ScoresObjective(const Sentence& sentence, const Segmentation& seg,
                       const ScoreTable& scores, double epsilon) {
  double total = 0.0;
  for (const Rhesis& r : seg.rhesis) {
    total += std::log(scores.Get(sentence.id(), r.start, r.end, epsilon));
  }
  return total;
}

Segmentation SegmentByScores(const Sentence& sentence,
                             const ScoreTable& scores, const SpanConfig& span,
                             double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "epsilon must lie in (0, 1)");
  }
  PartitionResult best = BestPartition(
      sentence.size(),
      [&](int first, int last) {
        return AdmissibleRhesis(sentence, first, last, span);
      },
      [&](int first, int last) {
        return std::log(scores.Get(sentence.id(), first, last, epsilon));
      });
  Segmentation seg = SegmentationFromCuts(sentence, best.cuts);
  AnnotateOversized(sentence, span, &seg);
  return seg;
}

}  // namespace rhesis
