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


#ifndef RHESIS_CORE_CONFIG_H_
#define RHESIS_CORE_CONFIG_H_

#include <string>
#include <string_view>

#include "core/cascade.h"
#include "core/dataset.h"
#include "core/evo_tuner.h"
#include "core/span.h"
#include "core/tree_segmenter.h"

namespace rhesis {

struct TreeOptions {
  int oracle_cap = kDefaultOracleCap;
  double score_epsilon = kDefaultScoreEpsilon;
};

// Effective run configuration. `span` is authoritative; Cascade() copies it
// into the cascade rules.
struct EngineConfig {
  SpanConfig span;
  CascadeConfig cascade;
  TreeOptions tree;
  EvoConfig evo;

  CascadeConfig Cascade() const;
  void Validate() const;
};

// Applies a JSON config document on top of `cfg`. Sections span, cascade,
// tree and evo; a top-level dotted key such as "span.max_chars" is accepted
// as well. Unknown keys and bad values are Error(kConfig).
void ApplyConfigJson(std::string_view text, EngineConfig* cfg);

// Sets one dotted key from a JSON-encoded value ("45", "\"words\"", ...).
void SetConfigValue(std::string_view dotted_key, std::string_view json_value,
                    EngineConfig* cfg);

std::string ConfigToJson(const EngineConfig& cfg);

}  // namespace rhesis

#endif  // RHESIS_CORE_CONFIG_H_
