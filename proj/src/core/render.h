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


#ifndef RHESIS_CORE_RENDER_H_
#define RHESIS_CORE_RENDER_H_

#include <span>
#include <string>
#include <string_view>

#include "core/corpus.h"

namespace rhesis {

enum class RenderFormat { kText, kRecords, kHtml };

std::string RenderFormatName(RenderFormat f);
RenderFormat ParseRenderFormat(std::string_view name);

struct RenderOptions {
  RenderFormat format = RenderFormat::kText;
  std::string html_class_prefix = "rhesis";
  bool include_ids = true;
};

// ".rhz": one rhesis per line, a blank line after each sentence.
std::string RenderText(std::span<const Segmentation> segs);

// One JSON object per rhesis and line: sentence_id, start, end, text.
std::string RenderRecords(std::span<const Segmentation> segs);

// HTML fragment: one <p> per sentence, one nowrap <span> per rhesis,
// separated by the original inter-rhesis spaces so the text content of a
// paragraph is the sentence surface.
std::string RenderHtml(std::span<const Segmentation> segs,
                       const RenderOptions& opts);

std::string Render(std::span<const Segmentation> segs,
                   const RenderOptions& opts);

// Escapes &, <, > and ".
std::string EscapeHtml(std::string_view text);

}  // namespace rhesis

#endif  // RHESIS_CORE_RENDER_H_
