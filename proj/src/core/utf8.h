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


#ifndef RHESIS_CORE_UTF8_H_
#define RHESIS_CORE_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rhesis {
namespace utf8 {

// Number of Unicode scalar values in a UTF-8 string. Continuation bytes are
// not counted, so malformed input degrades to an approximate count.
size_t CountScalars(std::string_view text);

// Whitespace-separated words.
size_t CountWords(std::string_view text);

bool IsAsciiSpace(char c);

// Lowercases ASCII and the Latin-1 supplement letters (À-Þ), which covers
// French preposition lists.
std::string ToLower(std::string_view text);

// Collapses runs of ASCII whitespace to a single space and trims both ends.
std::string NormalizeSpaces(std::string_view text);

std::string_view Trim(std::string_view text);

std::vector<std::string_view> Split(std::string_view text, char sep);

}  // namespace utf8
}  // namespace rhesis

#endif  // RHESIS_CORE_UTF8_H_
