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


#ifndef RHESIS_CORE_WEIGHTS_IO_H_
#define RHESIS_CORE_WEIGHTS_IO_H_

#include <string>
#include <string_view>

#include "core/tree_segmenter.h"

namespace rhesis {

// JSON weight file:
//   {"format": "rhesis-weights/1", "w_dep": .., "w_count": ..,
//    "w_balance": .., "w_depth": .., "w_cross": ..,
//    "default_deprel_weight": .., "deprel_weights": {"label": .., ...}}
// Keys are emitted in a fixed order so equal weights give equal bytes.
std::string WeightsToJson(const ScoringWeights& w);

// Missing keys keep their defaults; unknown keys and out-of-range values
// are Error(kFormat).
ScoringWeights WeightsFromJson(std::string_view text);

}  // namespace rhesis

#endif  // RHESIS_CORE_WEIGHTS_IO_H_
