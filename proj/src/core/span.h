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


#ifndef RHESIS_CORE_SPAN_H_
#define RHESIS_CORE_SPAN_H_

#include <string>
#include <string_view>

namespace rhesis {

enum class CountMode { kCharacters, kWords };

// The span condition: the maximum rhesis length, plus the preferred length
// the balance criterion pulls toward.
struct SpanConfig {
  int max_chars = 45;
  int target_chars = 32;
  CountMode count_mode = CountMode::kCharacters;

  // Throws Error(kConfig) unless 0 < target_chars <= max_chars.
  void Validate() const;
};

std::string CountModeName(CountMode mode);
CountMode ParseCountMode(std::string_view name);

// Length under the configured count mode: Unicode scalars (spaces included)
// or whitespace-separated words.
int SpanLength(std::string_view text, const SpanConfig& cfg);

bool FitsSpan(std::string_view text, const SpanConfig& cfg);

}  // namespace rhesis

#endif  // RHESIS_CORE_SPAN_H_
