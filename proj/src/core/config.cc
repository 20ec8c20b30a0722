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


#include "core/config.h"

#include "core/error.h"
#include "json.hpp"

namespace rhesis {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Error ConfigError(const std::string& what) {
  return Error(ErrorKind::kConfig, "config: " + what);
}

std::set<std::string> StringSet(const json& v, const std::string& key) {
  if (!v.is_array()) throw ConfigError(key + " must be an array of strings");
  std::set<std::string> out;
  for (const json& item : v) {
    if (!item.is_string()) {
      throw ConfigError(key + " must be an array of strings");
    }
    out.insert(item.get<std::string>());
  }
  return out;
}

void ApplyKey(const std::string& section, const std::string& key,
              const json& v, EngineConfig* cfg) {
  const std::string full = section + "." + key;
  try {
    if (section == "span") {
      if (key == "max_chars") return void(cfg->span.max_chars = v.get<int>());
      if (key == "target_chars") {
        return void(cfg->span.target_chars = v.get<int>());
      }
      if (key == "count_mode") {
        return void(
            cfg->span.count_mode = ParseCountMode(v.get<std::string>()));
      }
    } else if (section == "cascade") {
      if (key == "priority_prepositions") {
        return void(cfg->cascade.priority_prepositions = StringSet(v, full));
      }
      if (key == "clause_deprels") {
        return void(cfg->cascade.clause_deprels = StringSet(v, full));
      }
      if (key == "glue_deprels") {
        return void(cfg->cascade.glue_deprels = StringSet(v, full));
      }
      if (key == "punctuation") {
        return void(cfg->cascade.cut_punctuation = StringSet(v, full));
      }
    } else if (section == "tree") {
      if (key == "oracle_cap") return void(cfg->tree.oracle_cap = v.get<int>());
      if (key == "score_epsilon") {
        return void(cfg->tree.score_epsilon = v.get<double>());
      }
    } else if (section == "evo") {
      EvoConfig& e = cfg->evo;
      if (key == "population") return void(e.population = v.get<int>());
      if (key == "generations") return void(e.generations = v.get<int>());
      if (key == "tournament_k") return void(e.tournament_k = v.get<int>());
      if (key == "crossover_rate") {
        return void(e.crossover_rate = v.get<double>());
      }
      if (key == "mutation_sigma") {
        return void(e.mutation_sigma = v.get<double>());
      }
      if (key == "mutation_rate") {
        return void(e.mutation_rate = v.get<double>());
      }
      if (key == "elitism") return void(e.elitism = v.get<int>());
      if (key == "seed") return void(e.seed = v.get<uint64_t>());
      if (key == "fitness_metric") {
        return void(
            e.fitness_metric = ParseFitnessMetric(v.get<std::string>()));
      }
      if (key == "threads") return void(e.threads = v.get<int>());
    }
  } catch (const json::exception& ex) {
    throw ConfigError(full + ": " + ex.what());
  }
  throw ConfigError("unknown key '" + full + "'");
}

void ApplyDotted(const std::string& dotted, const json& v, EngineConfig* cfg) {
  size_t dot = dotted.find('.');
  if (dot == std::string::npos) {
    throw ConfigError("key '" + dotted + "' needs a section");
  }
  ApplyKey(dotted.substr(0, dot), dotted.substr(dot + 1), v, cfg);
}

}  // namespace

CascadeConfig EngineConfig::Cascade() const {
  CascadeConfig c = cascade;
  c.span = span;
  return c;
}

void EngineConfig::Validate() const {
  span.Validate();
  evo.Validate();
  if (cascade.cut_punctuation.empty() || cascade.clause_deprels.empty() ||
      cascade.glue_deprels.empty() || cascade.priority_prepositions.empty()) {
    throw ConfigError("cascade sets must be nonempty");
  }
  if (tree.oracle_cap < 1 || tree.oracle_cap > 24) {
    throw ConfigError("tree.oracle_cap must lie in [1, 24]");
  }
  if (!(tree.score_epsilon > 0.0 && tree.score_epsilon < 1.0)) {
    throw ConfigError("tree.score_epsilon must lie in (0, 1)");
  }
}

void ApplyConfigJson(std::string_view text, EngineConfig* cfg) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw ConfigError(ex.what());
  }
  if (!doc.is_object()) throw ConfigError("document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key.find('.') != std::string::npos) {
      ApplyDotted(key, value, cfg);
    } else if (value.is_object()) {
      for (const auto& [sub, v] : value.items()) ApplyKey(key, sub, v, cfg);
    } else {
      throw ConfigError("section '" + key + "' must be an object");
    }
  }
  cfg->Validate();
}

void SetConfigValue(std::string_view dotted_key, std::string_view json_value,
                    EngineConfig* cfg) {
  json v;
  try {
    v = json::parse(json_value);
  } catch (const json::exception& ex) {
    throw ConfigError(std::string(dotted_key) + ": " + ex.what());
  }
  ApplyDotted(std::string(dotted_key), v, cfg);
  cfg->Validate();
}

std::string ConfigToJson(const EngineConfig& cfg) {
  ordered_json j;
  j["span"]["max_chars"] = cfg.span.max_chars;
  j["span"]["target_chars"] = cfg.span.target_chars;
  j["span"]["count_mode"] = CountModeName(cfg.span.count_mode);
  j["cascade"]["priority_prepositions"] = cfg.cascade.priority_prepositions;
  j["cascade"]["clause_deprels"] = cfg.cascade.clause_deprels;
  j["cascade"]["glue_deprels"] = cfg.cascade.glue_deprels;
  j["cascade"]["punctuation"] = cfg.cascade.cut_punctuation;
  j["tree"]["oracle_cap"] = cfg.tree.oracle_cap;
  j["tree"]["score_epsilon"] = cfg.tree.score_epsilon;
  const EvoConfig& e = cfg.evo;
  j["evo"]["population"] = e.population;
  j["evo"]["generations"] = e.generations;
  j["evo"]["tournament_k"] = e.tournament_k;
  j["evo"]["crossover_rate"] = e.crossover_rate;
  j["evo"]["mutation_sigma"] = e.mutation_sigma;
  j["evo"]["mutation_rate"] = e.mutation_rate;
  j["evo"]["elitism"] = e.elitism;
  j["evo"]["seed"] = e.seed;
  j["evo"]["fitness_metric"] = FitnessMetricName(e.fitness_metric);
  j["evo"]["threads"] = e.threads;
  return j.dump();
}

}  // namespace rhesis
