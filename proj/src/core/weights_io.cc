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


#include "core/weights_io.h"

#include "core/error.h"
#include "json.hpp"

namespace rhesis {

using nlohmann::ordered_json;

inline constexpr char kWeightsFormat[] = "rhesis-weights/1";

std::string WeightsToJson(const ScoringWeights& w) {
  ordered_json j;
  j["format"] = kWeightsFormat;
  j["w_dep"] = w.w_dep;
  j["w_count"] = w.w_count;
  j["w_balance"] = w.w_balance;
  j["w_depth"] = w.w_depth;
  j["w_cross"] = w.w_cross;
  j["default_deprel_weight"] = w.default_deprel_weight;
  ordered_json table = ordered_json::object();
  for (const auto& [label, v] : w.deprel_weights) table[label] = v;
  j["deprel_weights"] = table;
  return j.dump(2) + "\n";
}

ScoringWeights WeightsFromJson(std::string_view text) {
  ScoringWeights w;
  try {
    ordered_json j = ordered_json::parse(text);
    if (!j.is_object()) throw Error(ErrorKind::kFormat, "not an object");
    for (const auto& [key, value] : j.items()) {
      if (key == "format") {
        if (value != kWeightsFormat) {
          throw Error(ErrorKind::kFormat,
                      "unsupported weight format " + value.dump());
        }
      } else if (key == "w_dep") {
        w.w_dep = value.get<double>();
      } else if (key == "w_count") {
        w.w_count = value.get<double>();
      } else if (key == "w_balance") {
        w.w_balance = value.get<double>();
      } else if (key == "w_depth") {
        w.w_depth = value.get<double>();
      } else if (key == "w_cross") {
        w.w_cross = value.get<double>();
      } else if (key == "default_deprel_weight") {
        w.default_deprel_weight = value.get<double>();
      } else if (key == "deprel_weights") {
        for (const auto& [label, v] : value.items()) {
          w.deprel_weights[label] = v.get<double>();
        }
      } else {
        throw Error(ErrorKind::kFormat, "unknown weight key '" + key + "'");
      }
    }
    w.Validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::kFormat, std::string("weight file: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kFormat, std::string("weight file: ") + e.what());
  }
  return w;
}

}  // namespace rhesis
