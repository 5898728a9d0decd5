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

#ifndef ABBREV_EXTRACTION_H_
#define ABBREV_EXTRACTION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "abbrev/config.h"
#include "abbrev/textmodel.h"

namespace abbrev {

enum class PatternKind { kHead, kTail };

std::string_view PatternKindName(PatternKind kind);

// Spans of the outer group (A, before the bracket) and the bracketed group
// (B) of one pattern match, relative to the searched sentence.
struct PatternMatch {
  Span outer;
  Span inner;
  Span bracket;  // opener through closer, inclusive
};

// Word spans (maximal runs of letters, digits and underscore).
std::vector<Span> FindWords(std::u32string_view text);

// Head pattern: A is 1..maxOuterWords words separated by at most two
// non-word characters, ending just before optional whitespace and an opening
// '(' or '['. B is the bracket content (1..maxInnerChars characters,
// optionally followed by punctuation, whitespace and one more word). The
// first character of A equals the first character of B, ignoring case.
class HeadPattern {
 public:
  explicit HeadPattern(const Params& params);
  std::vector<PatternMatch> FindAll(std::u32string_view sentence) const;

 private:
  int max_outer_words_;
  int max_inner_chars_;
};

// Tail pattern: A holds at most maxOuterChars characters followed by a final
// complete word whose first character equals the last character of B's core
// (the content before an optional punctuation + word suffix), ignoring case.
class TailPattern {
 public:
  explicit TailPattern(const Params& params);
  std::vector<PatternMatch> FindAll(std::u32string_view sentence) const;

 private:
  int max_outer_chars_;
  int max_inner_chars_;
};

struct CandidatePair {
  Span lf_span;  // sentence-local
  Span sf_span;
  std::u32string lf_text;
  std::u32string sf_text;
  PatternKind kind = PatternKind::kHead;
  bool swapped = false;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

struct AcceptedPair : CandidatePair {
  Span original_lf_span;  // before truncation
  size_t matched = 0;     // SF letters found in order in LF
  size_t sf_letters = 0;  // letters in SF
  double score = 0.0;
  size_t sentence_index = 0;

  friend bool operator==(const AcceptedPair&, const AcceptedPair&) = default;
};

// Head matches if there are any, otherwise tail matches. Each match becomes
// a candidate with LF = A and SF = B.
std::vector<CandidatePair> FindCandidates(std::u32string_view sentence,
                                          const Params& params);

// Swaps LF and SF when the SF is strictly longer.
CandidatePair NormalizeOrientation(CandidatePair c);

bool IsDiscarded(std::u32string_view sf_text, const DiscardRuleSet& rules,
                 const Lexicon& prepositions);

struct MatchScore {
  size_t matched = 0;
  size_t total = 0;

  double value() const {
    return total == 0 ? 0.0 : static_cast<double>(matched) / total;
  }
  bool Passes(double threshold) const {
    return static_cast<double>(matched) + 1e-9 >= threshold * total;
  }
};

// Greedy in-order match of the SF's letters against the LF's letters, both
// case-folded. Throws std::domain_error("unscorable short form") when the
// SF has no letters.
MatchScore CharMatchScore(std::u32string_view lf_text,
                          std::u32string_view sf_text);

bool HasLetter(std::u32string_view text);

// Shrinks the LF to the shortest word-suffix after a preposition that keeps
// the pattern's constraint and still passes the score threshold.
CandidatePair TruncateLongForm(CandidatePair c, const Lexicon& prepositions,
                               const Params& params);

// Candidate search, orientation, discard filtering, truncation and scoring
// for one sentence. Output is in textual order.
std::vector<AcceptedPair> ExtractPairs(std::u32string_view sentence,
                                       size_t sentence_index,
                                       const Params& params,
                                       const DiscardRuleSet& rules,
                                       const Lexicon& prepositions);

// An accepted pair with its spans projected into document offsets.
struct ResolvedPair {
  AcceptedPair pair;
  Span lf_doc_span;
  Span sf_doc_span;
  size_t pair_id = 0;  // position in the document's pair list

  friend bool operator==(const ResolvedPair&, const ResolvedPair&) = default;
};

// SF text -> most recent LF, in first-insertion order.
class PairTable {
 public:
  struct Entry {
    std::u32string sf_text;
    std::u32string lf_text;
    size_t defining_sentence = 0;
    Span sf_doc_span;
    Span lf_doc_span;
    size_t pair_id = 0;
  };

  // Inserts or overwrites the entry for pair.sf_text. An overwritten entry
  // keeps its original position.
  void Upsert(const ResolvedPair& resolved);

  const Entry* Find(std::u32string_view sf_text) const;
  const std::vector<Entry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::u32string, size_t> index_;
};

void RecordPairs(PairTable& table, const std::vector<ResolvedPair>& pairs);

}  // namespace abbrev

#endif  // ABBREV_EXTRACTION_H_
