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

#include "abbrev/pipeline.h"

#include <algorithm>
#include <exception>

#include "abbrev/coreference.h"
#include "abbrev/unicode.h"

namespace abbrev {

ProcessResult ProcessDocumentDetailed(Document doc, const Resources& res) {
  if (doc.sentences.empty()) doc.sentences = SplitSentences(doc.text);

  ProcessResult result;
  PairTable table;
  std::vector<PairMentions> mentions;
  std::vector<Annotation> added;

  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    const Span sentence = doc.sentences[s];
    const std::u32string_view text =
        std::u32string_view(doc.text).substr(sentence.start, sentence.length());

    std::vector<ResolvedPair> resolved;
    for (AcceptedPair& pair :
         ExtractPairs(text, s, res.params, res.rules, res.prepositions)) {
      ResolvedPair r;
      r.lf_doc_span = ProjectSpan(sentence.start, pair.lf_span, doc.size());
      r.sf_doc_span = ProjectSpan(sentence.start, pair.sf_span, doc.size());
      r.pair_id = mentions.size();
      r.pair = std::move(pair);
      mentions.push_back({r.lf_doc_span, r.sf_doc_span, {}});
      resolved.push_back(std::move(r));
    }
    RecordPairs(table, resolved);
    for (Annotation& a : AnnotatePairs(doc, resolved)) {
      added.push_back(std::move(a));
    }

    if (res.params.coreference_enabled && !table.empty()) {
      std::vector<Span> occupied;
      for (const ResolvedPair& r : resolved) occupied.push_back(r.sf_doc_span);
      for (CorefMention& m :
           CoreferSentence(text, s, sentence.start, table, occupied)) {
        mentions[m.pair_id].coref_spans.push_back(m.annotation.span);
        added.push_back(std::move(m.annotation));
      }
    }
    for (ResolvedPair& r : resolved) result.pairs.push_back(std::move(r));
  }

  std::vector<Annotation> propagated =
      PropagateSemanticTypes(doc, mentions, res.propagation);
  for (Annotation& a : added) doc.annotations.push_back(std::move(a));
  for (Annotation& a : propagated) doc.annotations.push_back(std::move(a));

  if (res.params.dictionary_enabled && !res.dictionary.entries.empty()) {
    for (Annotation& a : AnnotateDictionary(doc, res.dictionary)) {
      doc.annotations.push_back(std::move(a));
    }
  }
  std::stable_sort(doc.annotations.begin(), doc.annotations.end(),
                   AnnotationLess);
  result.document = std::move(doc);
  return result;
}

Document ProcessDocument(Document doc, const Resources& res) {
  return ProcessDocumentDetailed(std::move(doc), res).document;
}

std::vector<ProcessResult> ProcessCorpus(std::vector<Document> docs,
                                         const Resources& res) {
  const auto n = static_cast<int64_t>(docs.size());
  std::vector<ProcessResult> results(docs.size());
  std::vector<std::exception_ptr> errors(docs.size());
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<size_t>(i);
    try {
      results[k] = ProcessDocumentDetailed(std::move(docs[k]), res);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<ProcessResult> ProcessCorpusSerial(std::vector<Document> docs,
                                               const Resources& res) {
  std::vector<ProcessResult> results;
  results.reserve(docs.size());
  for (Document& doc : docs) {
    results.push_back(ProcessDocumentDetailed(std::move(doc), res));
  }
  return results;
}

std::vector<GoldPair> PredictedPairs(const ProcessResult& result) {
  std::vector<GoldPair> out;
  out.reserve(result.pairs.size());
  for (const ResolvedPair& r : result.pairs) {
    out.push_back({result.document.id, EncodeUtf8(r.pair.sf_text),
                   EncodeUtf8(r.pair.lf_text), r.sf_doc_span, r.lf_doc_span});
  }
  return out;
}

}  // namespace abbrev
