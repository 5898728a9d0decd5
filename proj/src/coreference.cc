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

#include "abbrev/coreference.h"

#include <algorithm>

#include "abbrev/unicode.h"

namespace abbrev {

namespace {

constexpr std::u32string_view kRegexSpecials = U"\\^$.|?*+()[]{}";

}  // namespace

ShortFormMatcher::ShortFormMatcher(std::u32string_view short_form) {
  std::u32string current;
  for (char32_t c : short_form) {
    if (IsSpace(c)) {
      if (!current.empty()) parts_.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts_.push_back(std::move(current));
  if (!parts_.empty()) {
    word_start_ = IsWordChar(parts_.front().front());
    word_end_ = IsWordChar(parts_.back().back());
  }
}

size_t ShortFormMatcher::MatchAt(std::u32string_view text, size_t pos) const {
  if (parts_.empty()) return 0;
  if (word_start_ && pos > 0 && IsWordChar(text[pos - 1])) return 0;
  size_t p = pos;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      while (p < text.size() && IsSpace(text[p])) ++p;
    }
    if (text.substr(p, parts_[i].size()) != parts_[i]) return 0;
    p += parts_[i].size();
  }
  if (word_end_ && p < text.size() && IsWordChar(text[p])) return 0;
  return p - pos;
}

std::vector<Span> ShortFormMatcher::FindAll(std::u32string_view text) const {
  std::vector<Span> spans;
  size_t pos = 0;
  while (pos < text.size()) {
    if (size_t len = MatchAt(text, pos)) {
      spans.push_back({pos, pos + len});
      pos += len;
    } else {
      ++pos;
    }
  }
  return spans;
}

std::string ShortFormMatcher::pattern() const {
  std::u32string out;
  if (word_start_) out += U"\\b";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += U"\\s*";
    for (char32_t c : parts_[i]) {
      if (kRegexSpecials.find(c) != std::u32string_view::npos) {
        out.push_back('\\');
      }
      out.push_back(c);
    }
  }
  if (word_end_) out += U"\\b";
  return EncodeUtf8(out);
}

std::vector<CorefMention> CoreferSentence(std::u32string_view sentence,
                                          size_t sentence_index,
                                          size_t sentence_start,
                                          const PairTable& table,
                                          std::vector<Span>& occupied) {
  std::vector<const PairTable::Entry*> entries;
  for (const auto& entry : table.entries()) {
    if (entry.defining_sentence < sentence_index) entries.push_back(&entry);
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const PairTable::Entry* a, const PairTable::Entry* b) {
                     return a->sf_text.size() > b->sf_text.size();
                   });

  std::vector<CorefMention> mentions;
  for (const PairTable::Entry* entry : entries) {
    const ShortFormMatcher matcher(entry->sf_text);
    for (const Span& local : matcher.FindAll(sentence)) {
      const Span span{sentence_start + local.start,
                      sentence_start + local.end};
      const bool taken = std::any_of(
          occupied.begin(), occupied.end(),
          [&](const Span& o) { return o.Overlaps(span); });
      if (taken) continue;
      occupied.push_back(span);
      CorefMention m;
      m.annotation.span = span;
      m.annotation.type = std::string(kCorefShortForm);
      m.annotation.features["longForm"] = EncodeUtf8(entry->lf_text);
      m.pair_id = entry->pair_id;
      mentions.push_back(std::move(m));
    }
  }
  std::sort(mentions.begin(), mentions.end(),
            [](const CorefMention& a, const CorefMention& b) {
              return a.annotation.span < b.annotation.span;
            });
  return mentions;
}

}  // namespace abbrev
