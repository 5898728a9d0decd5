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

#include "oracle.h"

#include <cctype>
#include <functional>
#include <set>

namespace oracle {

namespace {

bool Word(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

char Lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

const std::set<std::string>& Prepositions() {
  static const std::set<std::string> kWords = {
      "of",     "in",      "for",       "with",   "on",      "at",
      "by",     "to",      "from",      "as",     "into",    "during",
      "including", "until", "against", "among", "throughout"};
  return kWords;
}

struct W {
  size_t begin, end;
};

std::vector<W> Words(const std::string& s) {
  std::vector<W> out;
  for (size_t i = 0; i < s.size();) {
    if (!Word(s[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && Word(s[j])) ++j;
    out.push_back({i, j});
    i = j;
  }
  return out;
}

bool Discarded(const std::string& sf) {
  const bool digit_ends = std::isdigit(static_cast<unsigned char>(sf.front())) &&
                          std::isdigit(static_cast<unsigned char>(sf.back()));
  if (digit_ends) return true;
  auto words = Words(sf);
  if (words.empty()) return false;
  std::string first;
  for (size_t i = words[0].begin; i < words[0].end; ++i) first += Lower(sf[i]);
  return Prepositions().count(first) > 0;
}

}  // namespace

std::string Letters(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) out += Lower(c);
  }
  return out;
}

int OptimalAlignment(std::string_view lf, std::string_view sf) {
  const std::string l = Letters(lf);
  const std::string s = Letters(sf);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
    size_t pos = 0;
    int count = 0;
    bool ok = true;
    for (size_t i = 0; i < s.size() && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      size_t at = l.find(s[i], pos);
      if (at == std::string::npos) {
        ok = false;
      } else {
        pos = at + 1;
        ++count;
      }
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

int GreedyMatches(std::string_view lf, std::string_view sf) {
  const std::string l = Letters(lf);
  const std::string s = Letters(sf);
  int matched = 0;
  size_t j = 0;
  for (char c : s) {
    size_t k = j;
    while (k < l.size() && l[k] != c) ++k;
    if (k < l.size()) {
      ++matched;
      j = k + 1;
    }
  }
  return matched;
}

std::optional<OraclePair> ExtractSingle(const std::string& sentence,
                                        double threshold) {
  const size_t open = sentence.find('(');
  const size_t close = sentence.find(')', open);
  if (open == std::string::npos || close == std::string::npos) return {};
  const std::string inner = sentence.substr(open + 1, close - open - 1);
  size_t a_end = open;
  while (a_end > 0 && sentence[a_end - 1] == ' ') --a_end;
  const std::string before = sentence.substr(0, a_end);
  const auto words = Words(before);
  if (words.empty() || words.back().end != a_end) return {};
  if (inner.empty() || inner.size() > 40) return {};

  // Head: every start among the last ten words, joined by 1-2 characters.
  std::optional<size_t> a_start;
  bool head = false;
  const size_t last = words.size() - 1;
  for (size_t k = 0; k <= last; ++k) {
    if (last - k + 1 > 10) continue;
    bool joined = true;
    for (size_t m = k; m < last; ++m) {
      const size_t gap = words[m + 1].begin - words[m].end;
      if (gap < 1 || gap > 2) joined = false;
    }
    if (!joined) continue;
    const char c = before[words[k].begin];
    if (std::isalnum(static_cast<unsigned char>(c)) &&
        Lower(c) == Lower(inner.front())) {
      a_start = words[k].begin;
      head = true;
      break;
    }
  }
  if (!a_start) {
    // Tail: the final word's initial against the content's last character,
    // and the longest prefix of at most 40 characters.
    const char initial = before[words[last].begin];
    if (Lower(initial) != Lower(inner.back())) return {};
    for (const W& w : words) {
      if (words[last].begin - w.begin <= 40) {
        a_start = w.begin;
        break;
      }
    }
  }

  std::string lf = before.substr(*a_start);
  std::string sf = inner;
  if (sf.size() > lf.size()) std::swap(lf, sf);
  if (Letters(sf).empty() || Discarded(sf)) return {};

  // Every word-start suffix after the first preposition; keep the shortest
  // that satisfies the pattern's constraint and the threshold.
  auto passes = [&](const std::string& l) {
    return GreedyMatches(l, sf) + 1e-9 >=
           threshold * static_cast<double>(Letters(sf).size());
  };
  const auto lf_words = Words(lf);
  std::optional<size_t> first_prep;
  for (size_t k = 0; k < lf_words.size(); ++k) {
    std::string w;
    for (size_t i = lf_words[k].begin; i < lf_words[k].end; ++i) w += Lower(lf[i]);
    if (Prepositions().count(w)) {
      first_prep = k;
      break;
    }
  }
  if (first_prep) {
    std::optional<std::string> best;
    for (size_t k = *first_prep + 1; k < lf_words.size(); ++k) {
      std::string suffix = lf.substr(lf_words[k].begin);
      if (head && Lower(suffix.front()) != Lower(sf.front())) continue;
      if (passes(suffix) && (!best || suffix.size() < best->size())) {
        best = suffix;
      }
    }
    if (best) lf = *best;
  }
  if (!passes(lf)) return {};
  return OraclePair{sf, lf,
                    static_cast<double>(GreedyMatches(lf, sf)) /
                        static_cast<double>(Letters(sf).size())};
}

Confusion BruteForceConfusion(const std::vector<Item>& predicted,
                              const std::vector<Item>& gold) {
  // Kuhn's augmenting paths over the full compatibility matrix.
  std::vector<int> owner(gold.size(), -1);
  std::function<bool(size_t, std::vector<bool>&)> augment =
      [&](size_t p, std::vector<bool>& seen) {
        for (size_t g = 0; g < gold.size(); ++g) {
          if (seen[g]) continue;
          if (predicted[p].doc != gold[g].doc ||
              predicted[p].key != gold[g].key) {
            continue;
          }
          seen[g] = true;
          if (owner[g] < 0 || augment(static_cast<size_t>(owner[g]), seen)) {
            owner[g] = static_cast<int>(p);
            return true;
          }
        }
        return false;
      };
  Confusion c;
  for (size_t p = 0; p < predicted.size(); ++p) {
    std::vector<bool> seen(gold.size(), false);
    if (augment(p, seen)) ++c.tp;
  }
  c.fp = static_cast<long>(predicted.size()) - c.tp;
  c.fn = static_cast<long>(gold.size()) - c.tp;
  return c;
}

}  // namespace oracle
