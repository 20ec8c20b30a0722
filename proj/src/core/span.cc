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


#include "core/span.h"

#include "core/error.h"
#include "core/utf8.h"

namespace rhesis {

void SpanConfig::Validate() const {
  if (max_chars <= 0 || target_chars <= 0 || target_chars > max_chars) {
    throw Error(ErrorKind::kConfig,
                "span requires 0 < target_chars <= max_chars (got " +
                    std::to_string(target_chars) + ", " +
                    std::to_string(max_chars) + ")");
  }
}

std::string CountModeName(CountMode mode) {
  return mode == CountMode::kWords ? "words" : "characters";
}

CountMode ParseCountMode(std::string_view name) {
  if (name == "characters" || name == "chars") return CountMode::kCharacters;
  if (name == "words") return CountMode::kWords;
  throw Error(ErrorKind::kConfig,
              "unknown count mode '" + std::string(name) + "'");
}

int SpanLength(std::string_view text, const SpanConfig& cfg) {
  if (cfg.count_mode == CountMode::kWords) {
    return static_cast<int>(utf8::CountWords(text));
  }
  return static_cast<int>(utf8::CountScalars(text));
}

bool FitsSpan(std::string_view text, const SpanConfig& cfg) {
  return SpanLength(text, cfg) <= cfg.max_chars;
}

}  // namespace rhesis
