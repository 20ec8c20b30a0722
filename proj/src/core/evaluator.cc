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


#include "core/evaluator.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "core/error.h"
#include "core/utf8.h"
#include "json.hpp"

namespace rhesis {
namespace {

void CheckParallel(std::span<const Segmentation> autos,
                   std::span<const Segmentation> golds) {
  if (autos.size() != golds.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "sentence count mismatch: " + std::to_string(autos.size()) +
                    " automatic vs " + std::to_string(golds.size()) + " gold");
  }
  for (size_t k = 0; k < autos.size(); ++k) {
    if (autos[k].TokenCount() != golds[k].TokenCount()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "token count mismatch in sentence " + golds[k].sentence_id);
    }
  }
}

double F1(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

void CheckRate(const std::string& label, const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(name) + " of " + label + " is outside [0, 1]");
  }
}

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * v);
  return buf;
}

}  // namespace

PrfResult RhesisPrecision(std::span<const Segmentation> autos,
                          std::span<const Segmentation> golds) {
  CheckParallel(autos, golds);
  PrfResult r;
  for (size_t k = 0; k < autos.size(); ++k) {
    std::set<std::pair<int, int>> gold_spans;
    for (const Rhesis& g : golds[k].rhesis) gold_spans.insert({g.start, g.end});
    for (const Rhesis& a : autos[k].rhesis) {
      r.matches += gold_spans.count({a.start, a.end});
    }
    r.auto_count += autos[k].rhesis.size();
    r.gold_count += golds[k].rhesis.size();
  }
  r.precision = r.auto_count ? double(r.matches) / double(r.auto_count) : 0.0;
  r.recall = r.gold_count ? double(r.matches) / double(r.gold_count) : 0.0;
  r.f1 = F1(r.precision, r.recall);
  return r;
}

PrfResult BoundaryPrf(std::span<const Segmentation> autos,
                      std::span<const Segmentation> golds) {
  CheckParallel(autos, golds);
  PrfResult r;
  for (size_t k = 0; k < autos.size(); ++k) {
    std::vector<int> a = autos[k].Cuts();
    std::vector<int> g = golds[k].Cuts();
    std::set<int> gold_set(g.begin(), g.end());
    for (int c : a) r.matches += gold_set.count(c);
    r.auto_count += a.size();
    r.gold_count += g.size();
  }
  r.precision =
      r.auto_count ? double(r.matches) / double(r.auto_count) : 1.0;
  r.recall = r.gold_count ? double(r.matches) / double(r.gold_count) : 1.0;
  r.f1 = F1(r.precision, r.recall);
  return r;
}

EvalReport CorpusReport(std::span<const DocRow> rows) {
  if (rows.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "report needs at least one row");
  }
  EvalReport report;
  double p = 0, r = 0, f = 0;
  for (const DocRow& row : rows) {
    if (row.rhesis_count < 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "negative rhesis count for " + row.label);
    }
    CheckRate(row.label, "precision", row.precision);
    CheckRate(row.label, "recall", row.recall);
    CheckRate(row.label, "f1", row.f1);
    CheckRate(row.label, "boundary precision", row.boundary_precision);
    CheckRate(row.label, "boundary recall", row.boundary_recall);
    CheckRate(row.label, "boundary f1", row.boundary_f1);
    report.total_count += row.rhesis_count;
    p += row.rhesis_count * row.precision;
    r += row.rhesis_count * row.recall;
    f += row.rhesis_count * row.f1;
    report.per_doc.push_back(row);
  }
  if (report.total_count == 0) {
    throw Error(ErrorKind::kInvalidArgument, "total rhesis count is zero");
  }
  report.weighted_precision = p / report.total_count;
  report.weighted_recall = r / report.total_count;
  report.weighted_f1 = f / report.total_count;
  return report;
}

EvalReport EvaluateDocuments(std::span<const Segmentation> autos,
                             std::span<const Segmentation> golds,
                             std::span<const std::string> labels) {
  CheckParallel(autos, golds);
  if (labels.size() != golds.size()) {
    throw Error(ErrorKind::kInvalidArgument, "one label per sentence needed");
  }
  std::vector<std::string> order;
  std::map<std::string, std::vector<size_t>> members;
  for (size_t k = 0; k < labels.size(); ++k) {
    auto [it, inserted] = members.try_emplace(labels[k]);
    if (inserted) order.push_back(labels[k]);
    it->second.push_back(k);
  }
  std::vector<DocRow> rows;
  for (const std::string& label : order) {
    std::vector<Segmentation> a, g;
    for (size_t k : members[label]) {
      a.push_back(autos[k]);
      g.push_back(golds[k]);
    }
    PrfResult rhesis = RhesisPrecision(a, g);
    PrfResult bound = BoundaryPrf(a, g);
    rows.push_back({label, static_cast<int>(rhesis.gold_count),
                    rhesis.precision, rhesis.recall, rhesis.f1,
                    bound.precision, bound.recall, bound.f1});
  }
  return CorpusReport(rows);
}

std::string EvalReport::ToTable() const {
  size_t width = std::string("Weighted Average").size();
  for (const DocRow& row : per_doc) width = std::max(width, row.label.size());
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-*s %8s %9s %9s %9s %9s %9s %9s\n",
                static_cast<int>(width), "Text", "Rhesis", "Precision",
                "Recall", "F1", "B-Prec", "B-Recall", "B-F1");
  os << buf;
  for (const DocRow& row : per_doc) {
    std::snprintf(buf, sizeof(buf), "%-*s %8d %9s %9s %9s %9s %9s %9s\n",
                  static_cast<int>(width), row.label.c_str(),
                  row.rhesis_count, Percent(row.precision).c_str(),
                  Percent(row.recall).c_str(), Percent(row.f1).c_str(),
                  Percent(row.boundary_precision).c_str(),
                  Percent(row.boundary_recall).c_str(),
                  Percent(row.boundary_f1).c_str());
    os << buf;
  }
  std::snprintf(buf, sizeof(buf), "%-*s %8d %9s %9s %9s\n",
                static_cast<int>(width), "Weighted Average", total_count,
                Percent(weighted_precision).c_str(),
                Percent(weighted_recall).c_str(),
                Percent(weighted_f1).c_str());
  os << buf;
  return os.str();
}

std::string EvalReport::ToJson() const {
  nlohmann::ordered_json j;
  j["per_doc"] = nlohmann::ordered_json::array();
  for (const DocRow& row : per_doc) {
    nlohmann::ordered_json r;
    r["label"] = row.label;
    r["rhesis_count"] = row.rhesis_count;
    r["precision"] = row.precision;
    r["recall"] = row.recall;
    r["f1"] = row.f1;
    r["boundary_precision"] = row.boundary_precision;
    r["boundary_recall"] = row.boundary_recall;
    r["boundary_f1"] = row.boundary_f1;
    j["per_doc"].push_back(std::move(r));
  }
  j["total_count"] = total_count;
  j["weighted_precision"] = weighted_precision;
  j["weighted_recall"] = weighted_recall;
  j["weighted_f1"] = weighted_f1;
  return j.dump(2) + "\n";
}

LengthStats ComputeLengthStats(std::span<const Segmentation> segs) {
  std::vector<double> chars, words;
  for (const Segmentation& s : segs) {
    for (const Rhesis& r : s.rhesis) {
      chars.push_back(double(utf8::CountScalars(r.text)));
      words.push_back(double(utf8::CountWords(r.text)));
    }
  }
  if (chars.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no rhesis to describe");
  }
  auto moments = [](const std::vector<double>& v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= double(v.size());
    double var = 0;
    for (double x : v) var += (x - mean) * (x - mean);
    return std::make_pair(mean, std::sqrt(var / double(v.size())));
  };
  LengthStats st;
  st.count = chars.size();
  std::tie(st.mean_chars, st.std_chars) = moments(chars);
  std::tie(st.mean_words, st.std_words) = moments(words);
  for (double c : chars) {
    size_t bucket = static_cast<size_t>(c) / kHistogramBucketChars;
    if (st.histogram.size() <= bucket) st.histogram.resize(bucket + 1, 0);
    ++st.histogram[bucket];
  }
  return st;
}

std::string LengthStats::ToTable() const {
  std::ostringstream os;
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "rhesis      %zu\nchars       mean %.2f  std %.2f\n"
                "words       mean %.2f  std %.2f\n",
                count, mean_chars, std_chars, mean_words, std_words);
  os << buf << "histogram (chars)\n";
  for (size_t k = 0; k < histogram.size(); ++k) {
    int lo = static_cast<int>(k) * kHistogramBucketChars;
    std::snprintf(buf, sizeof(buf), "  %3d-%-3d %6zu ", lo,
                  lo + kHistogramBucketChars - 1, histogram[k]);
    os << buf << std::string(std::min<size_t>(histogram[k], 60), '#') << "\n";
  }
  return os.str();
}

std::string LengthStats::ToJson() const {
  nlohmann::ordered_json j;
  j["count"] = count;
  j["mean_chars"] = mean_chars;
  j["std_chars"] = std_chars;
  j["mean_words"] = mean_words;
  j["std_words"] = std_words;
  j["bucket_chars"] = kHistogramBucketChars;
  j["histogram"] = histogram;
  return j.dump(2) + "\n";
}

}  // namespace rhesis
