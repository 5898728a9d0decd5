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

#include "abbrev/extraction.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "abbrev/unicode.h"

namespace abbrev {

namespace {

bool IsBracket(char32_t c) {
  return c == '(' || c == ')' || c == '[' || c == ']';
}

char32_t CloserFor(char32_t opener) { return opener == '(' ? ')' : ']'; }

// Candidate B cores for a bracket content, in preference order: the whole
// content, then the content minus a trailing "punct ws* word" suffix.
std::vector<Span> InnerCores(std::u32string_view text, Span content,
                             int max_inner_chars) {
  std::vector<Span> cores;
  const auto limit = static_cast<size_t>(max_inner_chars);
  if (content.length() >= 1 && content.length() <= limit) {
    cores.push_back(content);
  }
  size_t p = content.end;
  while (p > content.start && IsWordChar(text[p - 1])) --p;
  if (p == content.end) return cores;
  while (p > content.start && IsSpace(text[p - 1])) --p;
  if (p == content.start || !IsPunct(text[p - 1])) return cores;
  Span core{content.start, p - 1};
  if (core.length() >= 1 && core.length() <= limit) cores.push_back(core);
  return cores;
}

// Index of the word that ends exactly at `end`, or nullopt.
std::optional<size_t> WordEndingAt(const std::vector<Span>& words,
                                   size_t end) {
  auto it = std::lower_bound(
      words.begin(), words.end(), end,
      [](const Span& w, size_t e) { return w.end < e; });
  if (it == words.end() || it->end != end) return std::nullopt;
  return static_cast<size_t>(it - words.begin());
}

// Drives a pattern over every bracketed group of the sentence. `try_match`
// receives the opener position, the content span and the lower bound for
// A's start; it returns a match or nullopt. Matches never overlap and A
// never contains a bracket character.
template <typename TryMatch>
std::vector<PatternMatch> ScanBrackets(std::u32string_view text,
                                       TryMatch try_match) {
  std::vector<PatternMatch> matches;
  size_t lower = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    const char32_t c = text[i];
    if (!IsBracket(c)) continue;
    if (c == '(' || c == '[') {
      const size_t close = text.find(CloserFor(c), i + 1);
      if (close != std::u32string_view::npos) {
        if (auto m = try_match(i, Span{i + 1, close}, lower)) {
          m->bracket = {i, close + 1};
          matches.push_back(*m);
          lower = close + 1;
          i = close;
          continue;
        }
      }
    }
    lower = i + 1;
  }
  return matches;
}

// End of A: the last word character before optional whitespace at `opener`.
std::optional<size_t> LastOuterWord(std::u32string_view text,
                                    const std::vector<Span>& words,
                                    size_t opener, size_t lower) {
  size_t e = opener;
  while (e > lower && IsSpace(text[e - 1])) --e;
  if (e <= lower || !IsWordChar(text[e - 1])) return std::nullopt;
  auto last = WordEndingAt(words, e);
  if (!last || words[*last].start < lower) return std::nullopt;
  return last;
}

}  // namespace

std::string_view PatternKindName(PatternKind kind) {
  return kind == PatternKind::kHead ? "head" : "tail";
}

std::vector<Span> FindWords(std::u32string_view text) {
  std::vector<Span> words;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsWordChar(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && IsWordChar(text[j])) ++j;
    words.push_back({i, j});
    i = j;
  }
  return words;
}

HeadPattern::HeadPattern(const Params& params)
    : max_outer_words_(params.max_outer_words),
      max_inner_chars_(params.max_inner_chars) {}

std::vector<PatternMatch> HeadPattern::FindAll(
    std::u32string_view text) const {
  const std::vector<Span> words = FindWords(text);
  auto try_match = [&](size_t opener, Span content,
                       size_t lower) -> std::optional<PatternMatch> {
    const std::vector<Span> cores =
        InnerCores(text, content, max_inner_chars_);
    if (cores.empty()) return std::nullopt;
    const Span core = cores.front();
    const char32_t first = text[core.start];
    if (!IsAlnum(first)) return std::nullopt;

    auto last = LastOuterWord(text, words, opener, lower);
    if (!last) return std::nullopt;

    // Walk back over at most max_outer_words_ words joined by one or two
    // separator characters, remembering the leftmost usable start.
    std::optional<size_t> best;
    size_t k = *last;
    for (int count = 1; count <= max_outer_words_; ++count) {
      const char32_t head = text[words[k].start];
      if (IsAlnum(head) && EqualFolded(head, first)) best = k;
      if (k == 0) break;
      const Span& prev = words[k - 1];
      const size_t gap = words[k].start - prev.end;
      if (prev.start < lower || gap < 1 || gap > 2) break;
      bool bracket = false;
      for (size_t g = prev.end; g < words[k].start; ++g) {
        bracket = bracket || IsBracket(text[g]);
      }
      if (bracket) break;
      --k;
    }
    if (!best) return std::nullopt;
    return PatternMatch{{words[*best].start, words[*last].end}, core, {}};
  };
  return ScanBrackets(text, try_match);
}

TailPattern::TailPattern(const Params& params)
    : max_outer_chars_(params.max_outer_chars),
      max_inner_chars_(params.max_inner_chars) {}

std::vector<PatternMatch> TailPattern::FindAll(
    std::u32string_view text) const {
  const std::vector<Span> words = FindWords(text);
  auto try_match = [&](size_t opener, Span content,
                       size_t lower) -> std::optional<PatternMatch> {
    auto last = LastOuterWord(text, words, opener, lower);
    if (!last) return std::nullopt;
    const Span final_word = words[*last];
    const char32_t head = text[final_word.start];
    if (!IsAlnum(head)) return std::nullopt;

    std::optional<Span> chosen;
    for (const Span& core : InnerCores(text, content, max_inner_chars_)) {
      if (EqualFolded(text[core.end - 1], head)) {
        chosen = core;
        break;
      }
    }
    if (!chosen) return std::nullopt;

    // Leftmost word start within max_outer_chars_ of the final word.
    const size_t reach =
        final_word.start > static_cast<size_t>(max_outer_chars_)
            ? final_word.start - max_outer_chars_
            : 0;
    const size_t floor = std::max(reach, lower);
    size_t start = final_word.start;
    for (size_t k = *last + 1; k-- > 0;) {
      if (words[k].start < floor) break;
      if (IsAlnum(text[words[k].start])) start = words[k].start;
    }
    return PatternMatch{{start, final_word.end}, *chosen, {}};
  };
  return ScanBrackets(text, try_match);
}

std::vector<CandidatePair> FindCandidates(std::u32string_view sentence,
                                          const Params& params) {
  PatternKind kind = PatternKind::kHead;
  std::vector<PatternMatch> matches = HeadPattern(params).FindAll(sentence);
  if (matches.empty()) {
    kind = PatternKind::kTail;
    matches = TailPattern(params).FindAll(sentence);
  }
  std::vector<CandidatePair> out;
  out.reserve(matches.size());
  for (const PatternMatch& m : matches) {
    CandidatePair c;
    c.lf_span = m.outer;
    c.sf_span = m.inner;
    c.lf_text = std::u32string(sentence.substr(m.outer.start, m.outer.length()));
    c.sf_text = std::u32string(sentence.substr(m.inner.start, m.inner.length()));
    c.kind = kind;
    out.push_back(std::move(c));
  }
  return out;
}

CandidatePair NormalizeOrientation(CandidatePair c) {
  if (c.sf_text.size() > c.lf_text.size()) {
    std::swap(c.lf_span, c.sf_span);
    std::swap(c.lf_text, c.sf_text);
    c.swapped = true;
  }
  return c;
}

bool IsDiscarded(std::u32string_view sf_text, const DiscardRuleSet& rules,
                 const Lexicon& prepositions) {
  if (rules.FirstMatch(EncodeUtf8(sf_text)) >= 0) return true;
  const std::vector<Span> words = FindWords(sf_text);
  if (words.empty()) return false;
  const std::u32string first =
      FoldCase(sf_text.substr(words[0].start, words[0].length()));
  return prepositions.Contains(EncodeUtf8(first));
}

bool HasLetter(std::u32string_view text) {
  return std::any_of(text.begin(), text.end(), IsLetter);
}

MatchScore CharMatchScore(std::u32string_view lf_text,
                          std::u32string_view sf_text) {
  std::u32string lf;
  for (char32_t c : lf_text) {
    if (IsLetter(c)) lf.push_back(FoldCase(c));
  }
  MatchScore score;
  size_t cursor = 0;
  for (char32_t c : sf_text) {
    if (!IsLetter(c)) continue;
    ++score.total;
    const size_t at = lf.find(FoldCase(c), cursor);
    if (at != std::u32string::npos) {
      ++score.matched;
      cursor = at + 1;
    }
  }
  if (score.total == 0) throw std::domain_error("unscorable short form");
  return score;
}

CandidatePair TruncateLongForm(CandidatePair c, const Lexicon& prepositions,
                               const Params& params) {
  const std::vector<Span> words = FindWords(c.lf_text);
  std::vector<std::u32string> folded;
  folded.reserve(words.size());
  for (const Span& w : words) {
    folded.push_back(FoldCase(std::u32string_view(c.lf_text).substr(
        w.start, w.length())));
  }

  // Word index of the last word of every preposition occurrence.
  std::vector<size_t> occurrences;
  for (const std::string& entry : prepositions.words) {
    const std::u32string entry32 = DecodeUtf8(entry);
    std::vector<std::u32string> parts;
    for (const Span& w : FindWords(entry32)) {
      parts.push_back(entry32.substr(w.start, w.length()));
    }
    if (parts.empty() || parts.size() > folded.size()) continue;
    for (size_t i = 0; i + parts.size() <= folded.size(); ++i) {
      if (std::equal(parts.begin(), parts.end(), folded.begin() + i)) {
        occurrences.push_back(i + parts.size() - 1);
      }
    }
  }
  if (occurrences.empty() || c.sf_text.empty()) return c;
  std::sort(occurrences.begin(), occurrences.end());
  occurrences.erase(std::unique(occurrences.begin(), occurrences.end()),
                    occurrences.end());

  // Right to left over prepositions; within each, suffixes shortest first.
  // Suffixes after a later preposition were already rejected.
  size_t upper = words.size();
  for (auto it = occurrences.rbegin(); it != occurrences.rend(); ++it) {
    for (size_t i = upper; i-- > *it + 1;) {
      const size_t offset = words[i].start;
      if (c.kind == PatternKind::kHead &&
          !EqualFolded(c.lf_text[offset], c.sf_text.front())) {
        continue;
      }
      std::u32string_view suffix = std::u32string_view(c.lf_text).substr(offset);
      if (!CharMatchScore(suffix, c.sf_text).Passes(params.threshold)) {
        continue;
      }
      c.lf_span.start += offset;
      c.lf_text = std::u32string(suffix);
      return c;
    }
    upper = *it + 1;
  }
  return c;
}

std::vector<AcceptedPair> ExtractPairs(std::u32string_view sentence,
                                       size_t sentence_index,
                                       const Params& params,
                                       const DiscardRuleSet& rules,
                                       const Lexicon& prepositions) {
  std::vector<AcceptedPair> accepted;
  for (CandidatePair& raw : FindCandidates(sentence, params)) {
    CandidatePair c = NormalizeOrientation(std::move(raw));
    if (!HasLetter(c.sf_text)) continue;
    if (IsDiscarded(c.sf_text, rules, prepositions)) continue;
    const Span original_lf = c.lf_span;
    c = TruncateLongForm(std::move(c), prepositions, params);
    const MatchScore score = CharMatchScore(c.lf_text, c.sf_text);
    if (!score.Passes(params.threshold)) continue;

    AcceptedPair pair;
    static_cast<CandidatePair&>(pair) = std::move(c);
    pair.original_lf_span = original_lf;
    pair.matched = score.matched;
    pair.sf_letters = score.total;
    pair.score = score.value();
    pair.sentence_index = sentence_index;
    accepted.push_back(std::move(pair));
  }
  return accepted;
}

void PairTable::Upsert(const ResolvedPair& resolved) {
  const AcceptedPair& p = resolved.pair;
  Entry entry{p.sf_text, p.lf_text, p.sentence_index, resolved.sf_doc_span,
              resolved.lf_doc_span, resolved.pair_id};
  auto [it, inserted] = index_.emplace(p.sf_text, entries_.size());
  if (inserted) {
    entries_.push_back(std::move(entry));
  } else {
    entries_[it->second] = std::move(entry);
  }
}

const PairTable::Entry* PairTable::Find(std::u32string_view sf_text) const {
  auto it = index_.find(std::u32string(sf_text));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

void RecordPairs(PairTable& table, const std::vector<ResolvedPair>& pairs) {
  for (const ResolvedPair& p : pairs) table.Upsert(p);
}

}  // namespace abbrev
