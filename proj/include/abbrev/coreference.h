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

#ifndef ABBREV_COREFERENCE_H_
#define ABBREV_COREFERENCE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "abbrev/extraction.h"
#include "abbrev/textmodel.h"

namespace abbrev {

// Literal matcher for a recorded short form. Each internal whitespace run of
// the short form matches zero or more whitespace characters in the text;
// everything else matches exactly (case-sensitive). Ends that are word
// characters must sit on a word boundary.
class ShortFormMatcher {
 public:
  explicit ShortFormMatcher(std::u32string_view short_form);

  // Leftmost non-overlapping matches.
  std::vector<Span> FindAll(std::u32string_view text) const;

  // Equivalent regular expression, for diagnostics.
  std::string pattern() const;

 private:
  size_t MatchAt(std::u32string_view text, size_t pos) const;  // 0 = no match

  std::vector<std::u32string> parts_;  // literal runs between whitespace
  bool word_start_ = false;
  bool word_end_ = false;
};

struct CorefMention {
  Annotation annotation;  // CorefShortForm with feature longForm
  size_t pair_id = 0;
};

// Finds later mentions of table entries defined in strictly earlier
// sentences. Entries are tried longest short form first; matches that
// overlap `occupied` (document offsets) are skipped and accepted matches are
// added to it. Mentions inside long forms are allowed.
std::vector<CorefMention> CoreferSentence(std::u32string_view sentence,
                                          size_t sentence_index,
                                          size_t sentence_start,
                                          const PairTable& table,
                                          std::vector<Span>& occupied);

}  // namespace abbrev

#endif  // ABBREV_COREFERENCE_H_
