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


#ifndef RHESIS_CORE_EVO_TUNER_H_
#define RHESIS_CORE_EVO_TUNER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/gold.h"
#include "core/span.h"
#include "core/tree_segmenter.h"

namespace rhesis {

enum class FitnessMetric { kPrecision, kF1 };

std::string FitnessMetricName(FitnessMetric m);
FitnessMetric ParseFitnessMetric(std::string_view name);

struct EvoConfig {
  int population = 40;
  int generations = 60;
  int tournament_k = 3;
  double crossover_rate = 0.7;  // uniform crossover, per child
  double mutation_sigma = 0.1;  // additive Gaussian
  double mutation_rate = 0.2;   // per gene
  int elitism = 2;
  uint64_t seed = 42;
  FitnessMetric fitness_metric = FitnessMetric::kPrecision;
  int threads = 0;  // 0: hardware concurrency; never affects results

  void Validate() const;
};

// Gene order: w_dep, w_count, w_balance, w_depth, w_cross, then one table
// entry per label in `labels`.
struct GenomeLayout {
  std::vector<std::string> labels;

  size_t size() const { return 5 + labels.size(); }
};

inline constexpr size_t kScalarGenes = 5;

struct Genome {
  std::vector<double> genes;

  friend bool operator==(const Genome&, const Genome&) = default;
};

// Dependency labels of non-root tokens, sorted.
GenomeLayout ObservedLayout(const AlignedCorpus& corpus);

// Clamps scalars to >= 0 and table entries to [-1, 1] in place.
void ClampGenome(Genome* genome);

ScoringWeights DecodeGenome(const Genome& genome, const GenomeLayout& layout);
Genome EncodeWeights(const ScoringWeights& w, const GenomeLayout& layout);

// Common-rhesis precision (or F1) of SegmentBest under the decoded weights
// over the whole corpus. Empty corpus is Error(kInvalidArgument).
double Fitness(const Genome& genome, const GenomeLayout& layout,
               const AlignedCorpus& corpus, const SpanConfig& span,
               FitnessMetric metric = FitnessMetric::kPrecision);

struct EvoResult {
  GenomeLayout layout;
  Genome best;
  double best_fitness = 0.0;
  std::vector<double> trace;  // best-ever fitness; [0] is the initial pop
  ScoringWeights weights;     // DecodeGenome(best)
};

// Seeded generational GA: elitism, tournament selection, uniform
// crossover, Gaussian mutation, clamping. Deterministic for a given seed
// regardless of thread count.
EvoResult Evolve(const AlignedCorpus& corpus, const EvoConfig& cfg,
                 const SpanConfig& span);

// Run manifest: seed, GA settings, span, gene labels and fitness trace.
std::string EvoManifestJson(const EvoConfig& cfg, const SpanConfig& span,
                            const EvoResult& result);

}  // namespace rhesis

#endif  // RHESIS_CORE_EVO_TUNER_H_
