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

#ifndef ABBREV_CORPUS_H_
#define ABBREV_CORPUS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abbrev/textmodel.h"
#include "json.hpp"

namespace abbrev {

// A gold-standard (or predicted) long-form/short-form pair. Spans, when
// present, are code-point offsets into the document text.
struct GoldPair {
  std::string doc_id;
  std::string sf_text;
  std::string lf_text;
  std::optional<Span> sf_span;
  std::optional<Span> lf_span;

  friend bool operator==(const GoldPair&, const GoldPair&) = default;
};

enum class IssueKind {
  kMalformedTag,
  kMismatchedId,
  kUnclosedTag,
  kOrphanShort,
  kOrphanLong,
  kBadSpan,
};

std::string_view IssueKindName(IssueKind kind);

struct ParseIssue {
  IssueKind kind;
  size_t location = 0;  // code-point offset into the source text
  std::string detail;
};

nlohmann::json ToJson(const ParseIssue& issue);

struct BiotextParse {
  std::u32string clean_text;
  std::vector<GoldPair> pairs;  // spans into clean_text
  std::vector<ParseIssue> issues;
};

// Parses text marked up with <Long id=N>...</Long> and <Short id=N>...</Short>
// elements (id quoted or bare). Tags are stripped from the clean text. Each
// Long pairs with the nearest following Short carrying the same id, or failing
// that the nearest preceding unpaired one. Structural problems are reported as
// issues; parsing never fails.
BiotextParse ParseBiotext(std::string_view raw,
                          const std::string& doc_id = "biotext");

// Gold TSV: docId, sfText, lfText and optionally sfStart, sfEnd, lfStart,
// lfEnd, tab separated. '#' lines and blank lines are skipped. Throws
// InputError naming the line on malformed input.
std::vector<GoldPair> ParseGoldTsv(std::string_view contents,
                                   const std::string& source_name = "<memory>");
std::vector<GoldPair> LoadGoldTsv(const std::string& path);

// Checks gold spans against the documents they refer to.
std::vector<ParseIssue> ValidateGold(const std::vector<GoldPair>& pairs,
                                     const std::vector<Document>& docs);

}  // namespace abbrev

#endif  // ABBREV_CORPUS_H_
