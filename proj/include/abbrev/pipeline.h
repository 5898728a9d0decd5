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

#ifndef ABBREV_PIPELINE_H_
#define ABBREV_PIPELINE_H_

#include <vector>

#include "abbrev/annotation.h"
#include "abbrev/config.h"
#include "abbrev/corpus.h"
#include "abbrev/extraction.h"
#include "abbrev/textmodel.h"

namespace abbrev {

// Everything a document pass reads. Immutable once built, so one instance is
// shared by all worker threads.
struct Resources {
  Params params;
  DiscardRuleSet rules = DiscardRuleSet::Defaults();
  Lexicon prepositions = Lexicon::DefaultPrepositions();
  PropagationConfig propagation;
  Lexicon dictionary{LexiconKind::kDictionary, {}, {}};
};

struct ProcessResult {
  Document document;               // annotations sorted by AnnotationLess
  std::vector<ResolvedPair> pairs;  // accepted pairs in textual order
};

// One pass over the sentences: extraction, span projection, pair recording,
// pair annotation and (optionally) coreference against earlier sentences.
// Semantic-type propagation and dictionary lookup run after the pass.
// Sentences are split first when doc.sentences is empty.
ProcessResult ProcessDocumentDetailed(Document doc, const Resources& res);
Document ProcessDocument(Document doc, const Resources& res);

// Documents processed concurrently (OpenMP); output order equals input
// order. The first exception thrown by any document is rethrown.
std::vector<ProcessResult> ProcessCorpus(std::vector<Document> docs,
                                         const Resources& res);

// Sequential reference for ProcessCorpus.
std::vector<ProcessResult> ProcessCorpusSerial(std::vector<Document> docs,
                                               const Resources& res);

// Accepted pairs as evaluation records, with document spans.
std::vector<GoldPair> PredictedPairs(const ProcessResult& result);

}  // namespace abbrev

#endif  // ABBREV_PIPELINE_H_
