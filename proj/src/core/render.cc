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


#include "core/render.h"

#include <sstream>

#include "core/error.h"
#include "json.hpp"

namespace rhesis {

std::string RenderFormatName(RenderFormat f) {
  switch (f) {
    case RenderFormat::kText: return "txt";
    case RenderFormat::kRecords: return "records";
    case RenderFormat::kHtml: return "html";
  }
  return "txt";
}

RenderFormat ParseRenderFormat(std::string_view name) {
  if (name == "txt") return RenderFormat::kText;
  if (name == "records") return RenderFormat::kRecords;
  if (name == "html") return RenderFormat::kHtml;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown format '" + std::string(name) + "'");
}

std::string EscapeHtml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string RenderText(std::span<const Segmentation> segs) {
  std::string out;
  for (const Segmentation& s : segs) {
    for (const Rhesis& r : s.rhesis) {
      out += r.text;
      out.push_back('\n');
    }
    out.push_back('\n');
  }
  return out;
}

std::string RenderRecords(std::span<const Segmentation> segs) {
  std::string out;
  for (const Segmentation& s : segs) {
    for (const Rhesis& r : s.rhesis) {
      nlohmann::ordered_json j;
      j["sentence_id"] = s.sentence_id;
      j["start"] = r.start;
      j["end"] = r.end;
      j["text"] = r.text;
      out += j.dump();
      out.push_back('\n');
    }
  }
  return out;
}

std::string RenderHtml(std::span<const Segmentation> segs,
                       const RenderOptions& opts) {
  const std::string prefix = EscapeHtml(opts.html_class_prefix);
  std::ostringstream os;
  for (const Segmentation& s : segs) {
    const std::string sid = EscapeHtml(s.sentence_id);
    os << "<p class=\"" << prefix << "-sentence\"";
    if (opts.include_ids) os << " id=\"" << sid << "\"";
    os << ">";
    for (size_t k = 0; k < s.rhesis.size(); ++k) {
      const Rhesis& r = s.rhesis[k];
      os << "<span class=\"" << prefix << "\"";
      if (opts.include_ids) os << " id=\"" << sid << "-r" << (k + 1) << "\"";
      os << " style=\"white-space:nowrap\">" << EscapeHtml(r.text)
         << "</span>";
      if (r.space_after && k + 1 < s.rhesis.size()) os << ' ';
    }
    os << "</p>\n";
  }
  return os.str();
}

std::string Render(std::span<const Segmentation> segs,
                   const RenderOptions& opts) {
  switch (opts.format) {
    case RenderFormat::kText: return RenderText(segs);
    case RenderFormat::kRecords: return RenderRecords(segs);
    case RenderFormat::kHtml: return RenderHtml(segs, opts);
  }
  return RenderText(segs);
}

}  // namespace rhesis
