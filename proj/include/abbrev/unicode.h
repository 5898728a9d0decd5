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

#ifndef ABBREV_UNICODE_H_
#define ABBREV_UNICODE_H_

#include <string>
#include <string_view>

namespace abbrev {

// UTF-8 <-> UTF-32 conversion. Invalid bytes decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view bytes);
std::string EncodeUtf8(std::u32string_view text);

// Character classes over code points. Letters cover Latin, Latin-1,
// Latin Extended-A, Greek and Cyrillic; everything else outside ASCII is
// treated as a non-word character.
bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
bool IsAlnum(char32_t c);
bool IsWordChar(char32_t c);  // letter, digit or underscore
bool IsSpace(char32_t c);
bool IsUpper(char32_t c);
bool IsPunct(char32_t c);  // printable, non-space, non-word

// Simple one-to-one case folding.
char32_t FoldCase(char32_t c);
std::u32string FoldCase(std::u32string_view text);
std::string ToLowerUtf8(std::string_view text);

inline bool EqualFolded(char32_t a, char32_t b) {
  return FoldCase(a) == FoldCase(b);
}

}  // namespace abbrev

#endif  // ABBREV_UNICODE_H_
