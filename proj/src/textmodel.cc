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

#include "abbrev/textmodel.h"

#include <algorithm>
#include <array>
#include <tuple>

#include "abbrev/error.h"
#include "abbrev/unicode.h"

namespace abbrev {

namespace {

// Lowercased tokens that end with a period but never end a sentence.
constexpr std::array<std::u32string_view, 22> kGuardTokens = {
    U"e.g.",   U"i.e.",  U"vs.",   U"fig.",   U"figs.", U"spp.",
    U"al.",    U"cf.",   U"approx.", U"ca.",  U"dr.",   U"mr.",
    U"mrs.",   U"ms.",   U"no.",   U"nos.",   U"ref.",  U"refs.",
    U"resp.",  U"eq.",   U"etc.",  U"st."};

bool IsCloser(char32_t c) {
  return c == ')' || c == ']' || c == '"' || c == '\'' || c == 0x201D ||
         c == 0x2019;
}

bool IsOpener(char32_t c) {
  return c == '(' || c == '[' || c == '"' || c == '\'' || c == 0x201C ||
         c == 0x2018;
}

// True when the '.' at `dot` closes a guarded abbreviation.
bool IsGuardedPeriod(std::u32string_view text, size_t dot) {
  size_t begin = dot;
  while (begin > 0 && !IsSpace(text[begin - 1])) --begin;
  while (begin < dot && IsOpener(text[begin])) ++begin;
  std::u32string token = FoldCase(text.substr(begin, dot + 1 - begin));
  for (auto guard : kGuardTokens) {
    if (token == guard) return true;
  }
  // A single capital letter: an initial ("J. Smith") or the last element of
  // a dotted acronym ("I.L.S.G.").
  if (dot >= 1 && IsUpper(text[dot - 1]) &&
      (dot == 1 || !IsLetter(text[dot - 2]))) {
    return true;
  }
  return false;
}

}  // namespace

bool AnnotationLess(const Annotation& a, const Annotation& b) {
  return std::forward_as_tuple(a.span.start, b.span.end, a.type, a.features) <
         std::forward_as_tuple(b.span.start, a.span.end, b.type, b.features);
}

Document Document::FromUtf8(std::string id, std::string_view utf8) {
  Document doc;
  doc.id = std::move(id);
  doc.text = DecodeUtf8(utf8);
  return doc;
}

std::vector<Span> SplitSentences(std::u32string_view text) {
  std::vector<Span> spans;
  const size_t n = text.size();
  auto emit = [&](size_t begin, size_t end) {
    while (begin < end && IsSpace(text[begin])) ++begin;
    while (end > begin && IsSpace(text[end - 1])) --end;
    if (begin < end) spans.push_back({begin, end});
  };

  size_t sentence_start = 0;
  for (size_t i = 0; i < n; ++i) {
    const char32_t c = text[i];
    if (c != '.' && c != '?' && c != '!') continue;
    size_t j = i + 1;
    while (j < n && IsCloser(text[j])) ++j;
    if (j >= n || !IsSpace(text[j])) continue;
    size_t k = j;
    while (k < n && IsSpace(text[k])) ++k;
    if (k >= n) continue;
    if (!IsUpper(text[k]) && !IsDigit(text[k])) continue;
    if (c == '.' && IsGuardedPeriod(text, i)) continue;
    emit(sentence_start, j);
    sentence_start = j;
    i = j - 1;
  }
  emit(sentence_start, n);
  return spans;
}

void CheckSpan(const Span& span, size_t text_length) {
  if (span.start >= span.end || span.end > text_length) {
    throw InvariantError("span [" + std::to_string(span.start) + "," +
                         std::to_string(span.end) +
                         ") out of bounds for text of length " +
                         std::to_string(text_length));
  }
}

std::u32string_view CoveredText(std::u32string_view text, const Span& span) {
  CheckSpan(span, text.size());
  return text.substr(span.start, span.length());
}

std::string CoveredTextUtf8(const Document& doc, const Span& span) {
  return EncodeUtf8(CoveredText(doc.text, span));
}

}  // namespace abbrev
