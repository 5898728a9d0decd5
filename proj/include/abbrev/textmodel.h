// Copyright 2026 The abbrev Authors.
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

#ifndef ABBREV_TEXTMODEL_H_
#define ABBREV_TEXTMODEL_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace abbrev {

// Half-open range of code-point offsets [start, end).
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  bool Contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

// Annotation types produced by the pipeline. Propagated semantic types use
// whatever name the source annotation carried.
inline constexpr std::string_view kLongForm = "LongForm";
inline constexpr std::string_view kShortForm = "ShortForm";
inline constexpr std::string_view kCorefShortForm = "CorefShortForm";
inline constexpr std::string_view kDictionaryShortForm = "DictionaryShortForm";

using FeatureMap = std::map<std::string, std::string>;

struct Annotation {
  Span span;
  std::string type;
  FeatureMap features;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

// Canonical output order: start ascending, longer spans first, then type.
bool AnnotationLess(const Annotation& a, const Annotation& b);

struct Document {
  std::string id;
  std::u32string text;
  std::vector<Span> sentences;
  std::vector<Annotation> annotations;

  static Document FromUtf8(std::string id, std::string_view utf8);
  size_t size() const { return text.size(); }
};

// Sentence boundaries: '.', '?' or '!' (optionally followed by closing
// quotes or brackets), then whitespace, then an uppercase letter or digit.
// Abbreviations such as "e.g.", "Fig." or an initial "J." never end a
// sentence. Returned spans are trimmed of surrounding whitespace.
std::vector<Span> SplitSentences(std::u32string_view text);

// Throws InvariantError when the span is empty-inverted or out of bounds.
void CheckSpan(const Span& span, size_t text_length);

std::u32string_view CoveredText(std::u32string_view text, const Span& span);
std::string CoveredTextUtf8(const Document& doc, const Span& span);

}  // namespace abbrev

#endif  // ABBREV_TEXTMODEL_H_
