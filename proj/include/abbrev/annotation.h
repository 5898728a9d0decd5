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

#ifndef ABBREV_ANNOTATION_H_
#define ABBREV_ANNOTATION_H_

#include <set>
#include <string>
#include <vector>

#include "abbrev/config.h"
#include "abbrev/extraction.h"
#include "abbrev/textmodel.h"
#include "json.hpp"

namespace abbrev {

// Semantic types that may be copied from a long form to its short forms.
struct PropagationConfig {
  std::set<std::string> propagatable_types;
};

// Maps a sentence-local span to document offsets. Throws InvariantError when
// the result falls outside the document.
Span ProjectSpan(size_t sentence_start, const Span& local,
                 size_t document_length);

// LongForm (feature shortForm) and ShortForm (feature longForm) annotations
// for each pair, both with feature score, in textual order.
std::vector<Annotation> AnnotatePairs(const Document& doc,
                                      const std::vector<ResolvedPair>& pairs);

// Document spans belonging to one accepted pair: its long form, its short
// form and every later coreferred mention.
struct PairMentions {
  Span lf_span;
  Span sf_span;
  std::vector<Span> coref_spans;
};

// For each pair whose long form lies inside a pre-existing annotation of a
// propagatable type, annotates the short form and its coreferred mentions
// with that type. Pre-existing annotations are read from doc.annotations.
std::vector<Annotation> PropagateSemanticTypes(
    const Document& doc, const std::vector<PairMentions>& pairs,
    const PropagationConfig& config);

// Whole-word, case-sensitive dictionary short forms that do not overlap an
// existing LongForm, ShortForm or CorefShortForm annotation of doc.
std::vector<Annotation> AnnotateDictionary(const Document& doc,
                                           const Lexicon& dictionary);

// {"doc_id": ..., "annotations": [{start, end, type, features}, ...]}
nlohmann::json ToStandoffJson(const Document& doc);

// Text with LongForm / ShortForm / CorefShortForm / DictionaryShortForm
// annotations written as inline XML-like elements. Annotations that cross an
// already open element are left out.
std::string ToInline(const Document& doc);

std::string XmlEscape(std::string_view text);

// Shortest decimal that round-trips, e.g. "0.8" or "1".
std::string FormatScore(double value);

}  // namespace abbrev

#endif  // ABBREV_ANNOTATION_H_
