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

#include <gtest/gtest.h>

#include <string>

#include "core/error.h"
#include "core/utf8.h"
#include "support/test_support.h"

namespace rhesis {
namespace {

TEST(FitsSpan, Examples) {
  SpanConfig cfg;
  cfg.max_chars = 45;
  EXPECT_TRUE(FitsSpan("all of them except one.", cfg));
  EXPECT_EQ(SpanLength("all of them except one.", cfg), 23);
  EXPECT_TRUE(FitsSpan("", cfg));
  const std::string long_text =
      "She's not a monkey but if she had to be an animal,";
  EXPECT_EQ(SpanLength(long_text, cfg), 50);
  EXPECT_FALSE(FitsSpan(long_text, cfg));
}

TEST(FitsSpan, CountsScalarsNotBytes) {
  SpanConfig cfg;
  cfg.max_chars = 5;
  cfg.target_chars = 5;
  EXPECT_EQ(SpanLength("forêt", cfg), 5);
  EXPECT_TRUE(FitsSpan("forêt", cfg));
  EXPECT_FALSE(FitsSpan("forêts", cfg));
  EXPECT_EQ(SpanLength("œil—«", cfg), 5);
}

TEST(FitsSpan, WordMode) {
  SpanConfig cfg;
  cfg.count_mode = CountMode::kWords;
  cfg.max_chars = 3;
  cfg.target_chars = 2;
  EXPECT_EQ(SpanLength("  all of  them ", cfg), 3);
  EXPECT_TRUE(FitsSpan("all of them", cfg));
  EXPECT_FALSE(FitsSpan("all of them except", cfg));
}

TEST(SpanConfig, Validate) {
  SpanConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.target_chars = 46;
  EXPECT_THROW(cfg.Validate(), Error);
  cfg.target_chars = 0;
  EXPECT_THROW(cfg.Validate(), Error);
  cfg.target_chars = 10;
  cfg.max_chars = 0;
  EXPECT_THROW(cfg.Validate(), Error);
}

TEST(CountMode, Names) {
  EXPECT_EQ(ParseCountMode("characters"), CountMode::kCharacters);
  EXPECT_EQ(ParseCountMode("words"), CountMode::kWords);
  EXPECT_EQ(CountModeName(CountMode::kWords), "words");
  EXPECT_THROW(ParseCountMode("bytes"), Error);
}

TEST(FitsSpanProperty, PrefixAndSuffixOfFittingTextFit) {
  testing::RandomCorpus gen(3);
  for (int k = 0; k < 300; ++k) {
    Sentence s = gen.MakeSentence("p");
    SpanConfig cfg = gen.MakeSpan();
    cfg.count_mode = CountMode::kCharacters;
    const std::string& text = s.text();
    if (!FitsSpan(text, cfg)) continue;
    // Cut only at scalar boundaries.
    for (size_t i = 0; i <= text.size(); ++i) {
      if (i < text.size() && (static_cast<unsigned char>(text[i]) & 0xC0) ==
                                 0x80) {
        continue;
      }
      EXPECT_TRUE(FitsSpan(text.substr(0, i), cfg));
      EXPECT_TRUE(FitsSpan(text.substr(i), cfg));
    }
  }
}

TEST(Utf8, Helpers) {
  EXPECT_EQ(utf8::CountScalars("été"), 3u);
  EXPECT_EQ(utf8::CountWords(" a  b\tc "), 3u);
  EXPECT_EQ(utf8::NormalizeSpaces("  a \t b  "), "a b");
  EXPECT_EQ(utf8::ToLower("Après VERS"), "après vers");
  EXPECT_EQ(utf8::ToLower("ÉTÉ"), "été");
}

}  // namespace
}  // namespace rhesis
