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


#include "core/evo_tuner.h"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "core/error.h"
#include "core/evaluator.h"
#include "json.hpp"

namespace rhesis {

std::string FitnessMetricName(FitnessMetric m) {
  return m == FitnessMetric::kF1 ? "f1" : "precision";
}

FitnessMetric ParseFitnessMetric(std::string_view name) {
  if (name == "precision") return FitnessMetric::kPrecision;
  if (name == "f1") return FitnessMetric::kF1;
  throw Error(ErrorKind::kConfig,
              "unknown fitness metric '" + std::string(name) + "'");
}

void EvoConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kConfig, "evo: " + what);
  };
  if (population <= 0) fail("population must be positive");
  if (generations < 0) fail("generations must be >= 0");
  if (tournament_k <= 0) fail("tournament_k must be positive");
  if (elitism < 0 || elitism >= population) {
    fail("elitism must satisfy 0 <= elitism < population");
  }
  if (!(crossover_rate >= 0 && crossover_rate <= 1)) {
    fail("crossover_rate must lie in [0, 1]");
  }
  if (!(mutation_rate >= 0 && mutation_rate <= 1)) {
    fail("mutation_rate must lie in [0, 1]");
  }
  if (!(mutation_sigma > 0)) fail("mutation_sigma must be positive");
  if (threads < 0) fail("threads must be >= 0");
}

GenomeLayout ObservedLayout(const AlignedCorpus& corpus) {
  std::set<std::string> labels;
  for (const AlignedEntry& e : corpus.entries) {
    for (const Token& t : e.sentence.tokens()) {
      if (t.head != 0) labels.insert(t.deprel);
    }
  }
  return GenomeLayout{{labels.begin(), labels.end()}};
}

void ClampGenome(Genome* genome) {
  for (size_t g = 0; g < genome->genes.size(); ++g) {
    double& v = genome->genes[g];
    v = g < kScalarGenes ? std::max(0.0, v) : std::clamp(v, -1.0, 1.0);
  }
}

ScoringWeights DecodeGenome(const Genome& genome, const GenomeLayout& layout) {
  if (genome.genes.size() != layout.size()) {
    throw Error(ErrorKind::kInvalidArgument, "genome length mismatch");
  }
  Genome g = genome;
  ClampGenome(&g);
  ScoringWeights w;
  w.w_dep = g.genes[0];
  w.w_count = g.genes[1];
  w.w_balance = g.genes[2];
  w.w_depth = g.genes[3];
  w.w_cross = g.genes[4];
  w.default_deprel_weight = 0.0;
  for (size_t k = 0; k < layout.labels.size(); ++k) {
    w.deprel_weights[layout.labels[k]] = g.genes[kScalarGenes + k];
  }
  return w;
}

Genome EncodeWeights(const ScoringWeights& w, const GenomeLayout& layout) {
  Genome g;
  g.genes = {w.w_dep, w.w_count, w.w_balance, w.w_depth, w.w_cross};
  for (const std::string& label : layout.labels) {
    g.genes.push_back(w.Lookup(label));
  }
  ClampGenome(&g);
  return g;
}

double Fitness(const Genome& genome, const GenomeLayout& layout,
               const AlignedCorpus& corpus, const SpanConfig& span,
               FitnessMetric metric) {
  if (corpus.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "fitness needs a gold corpus");
  }
  ScoringWeights w = DecodeGenome(genome, layout);
  std::vector<Segmentation> autos, golds;
  autos.reserve(corpus.size());
  golds.reserve(corpus.size());
  for (const AlignedEntry& e : corpus.entries) {
    autos.push_back(SegmentBest(e.sentence, w, span));
    golds.push_back(e.gold);
  }
  PrfResult r = RhesisPrecision(autos, golds);
  return metric == FitnessMetric::kF1 ? r.f1 : r.precision;
}

namespace {

void EvaluateAll(const std::vector<Genome>& pop, const GenomeLayout& layout,
                 const AlignedCorpus& corpus, const SpanConfig& span,
                 const EvoConfig& cfg, std::vector<double>* fitness) {
  fitness->assign(pop.size(), 0.0);
  unsigned workers = cfg.threads > 0 ? unsigned(cfg.threads)
                                     : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, static_cast<unsigned>(pop.size()));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t k = next++; k < pop.size(); k = next++) {
      (*fitness)[k] =
          Fitness(pop[k], layout, corpus, span, cfg.fitness_metric);
    }
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work);
  for (std::thread& t : threads) t.join();
}

// Indices sorted by fitness descending, index ascending.
std::vector<size_t> Ranking(const std::vector<double>& fitness) {
  std::vector<size_t> order(fitness.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return fitness[a] > fitness[b];
  });
  return order;
}

}  // namespace

EvoResult Evolve(const AlignedCorpus& corpus, const EvoConfig& cfg,
                 const SpanConfig& span) {
  if (corpus.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "tuning needs a gold corpus");
  }
  cfg.Validate();
  span.Validate();

  EvoResult result;
  result.layout = ObservedLayout(corpus);
  const size_t genes = result.layout.size();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> signed_unit(-1.0, 1.0);
  std::normal_distribution<double> noise(0.0, cfg.mutation_sigma);
  std::uniform_int_distribution<size_t> pick(0, size_t(cfg.population) - 1);

  std::vector<Genome> pop;
  pop.push_back(Genome{std::vector<double>(genes, 0.0)});
  if (cfg.population > 1) {
    Genome dep_only{std::vector<double>(genes, 0.0)};
    dep_only.genes[0] = 1.0;
    pop.push_back(std::move(dep_only));
  }
  while (pop.size() < size_t(cfg.population)) {
    Genome g;
    for (size_t k = 0; k < genes; ++k) {
      g.genes.push_back(k < kScalarGenes ? unit(rng) : signed_unit(rng));
    }
    pop.push_back(std::move(g));
  }

  std::vector<double> fitness;
  EvaluateAll(pop, result.layout, corpus, span, cfg, &fitness);
  auto track_best = [&]() {
    for (size_t k = 0; k < pop.size(); ++k) {
      if (result.best.genes.empty() || fitness[k] > result.best_fitness) {
        result.best = pop[k];
        result.best_fitness = fitness[k];
      }
    }
    result.trace.push_back(result.best_fitness);
  };
  track_best();

  auto tournament = [&]() {
    size_t winner = pick(rng);
    for (int t = 1; t < cfg.tournament_k; ++t) {
      size_t c = pick(rng);
      if (fitness[c] > fitness[winner] ||
          (fitness[c] == fitness[winner] && c < winner)) {
        winner = c;
      }
    }
    return winner;
  };

  for (int gen = 0; gen < cfg.generations; ++gen) {
    std::vector<Genome> next;
    next.reserve(pop.size());
    std::vector<size_t> ranked = Ranking(fitness);
    for (int e = 0; e < cfg.elitism; ++e) next.push_back(pop[ranked[e]]);
    while (next.size() < pop.size()) {
      const Genome& a = pop[tournament()];
      const Genome& b = pop[tournament()];
      Genome child = a;
      if (unit(rng) < cfg.crossover_rate) {
        for (size_t k = 0; k < genes; ++k) {
          if (unit(rng) < 0.5) child.genes[k] = b.genes[k];
        }
      }
      for (size_t k = 0; k < genes; ++k) {
        if (unit(rng) < cfg.mutation_rate) child.genes[k] += noise(rng);
      }
      ClampGenome(&child);
      next.push_back(std::move(child));
    }
    pop = std::move(next);
    EvaluateAll(pop, result.layout, corpus, span, cfg, &fitness);
    track_best();
  }
  result.weights = DecodeGenome(result.best, result.layout);
  return result;
}

std::string EvoManifestJson(const EvoConfig& cfg, const SpanConfig& span,
                            const EvoResult& result) {
  nlohmann::ordered_json j;
  j["seed"] = cfg.seed;
  nlohmann::ordered_json evo;
  evo["population"] = cfg.population;
  evo["generations"] = cfg.generations;
  evo["tournament_k"] = cfg.tournament_k;
  evo["crossover_rate"] = cfg.crossover_rate;
  evo["mutation_sigma"] = cfg.mutation_sigma;
  evo["mutation_rate"] = cfg.mutation_rate;
  evo["elitism"] = cfg.elitism;
  evo["fitness_metric"] = FitnessMetricName(cfg.fitness_metric);
  j["evo"] = evo;
  nlohmann::ordered_json sp;
  sp["max_chars"] = span.max_chars;
  sp["target_chars"] = span.target_chars;
  sp["count_mode"] = CountModeName(span.count_mode);
  j["span"] = sp;
  j["gene_labels"] = result.layout.labels;
  j["best_fitness"] = result.best_fitness;
  j["trace"] = result.trace;
  return j.dump(2) + "\n";
}

}  // namespace rhesis
