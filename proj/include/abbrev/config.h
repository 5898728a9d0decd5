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

#ifndef ABBREV_CONFIG_H_
#define ABBREV_CONFIG_H_

#include <map>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace abbrev {

// Runtime parameters of the extractor.
struct Params {
  int max_outer_words = 10;   // words in the long-form candidate
  int max_inner_chars = 40;   // characters inside the brackets
  int max_outer_chars = 40;   // characters before the tail pattern's last word
  double threshold = 0.80;    // minimum character-match score
  bool coreference_enabled = true;
  bool dictionary_enabled = false;

  friend bool operator==(const Params&, const Params&) = default;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Builds Params from key/value pairs named after the fields in camelCase
// (maxOuterWords, maxInnerChars, maxOuterChars, threshold,
// coreferenceEnabled, dictionaryEnabled). Later duplicates win.
// maxOuterChars defaults to 4 * maxOuterWords unless given explicitly.
// Throws InputError on unknown keys, unparsable values or range violations.
Params LoadParams(const KeyValues& args);

// Merges config-file values under command-line values, then LoadParams.
Params LoadParams(const KeyValues& file_args, const KeyValues& cli_args);

// Reads "key = value" lines; '#' starts a comment line.
KeyValues ReadKeyValueFile(const std::string& path);

// One short-form discard rule. Patterns use the ECMAScript regex dialect and
// are searched (not fully matched) against the short form; a leading "(?i)"
// makes the rule case-insensitive.
struct DiscardRule {
  std::string pattern;
  std::string description;
  std::regex compiled;
};

class DiscardRuleSet {
 public:
  DiscardRuleSet() = default;

  // Parses the rules file format: one pattern per line, optional
  // "<TAB>description", blank lines and '#' lines ignored.
  static DiscardRuleSet Parse(std::string_view contents,
                              const std::string& source_name = "<memory>");
  static DiscardRuleSet Load(const std::string& path);
  static DiscardRuleSet Defaults();

  std::string Serialize() const;

  // Index of the first matching rule, or -1.
  int FirstMatch(std::string_view short_form) const;

  const std::vector<DiscardRule>& rules() const { return rules_; }
  size_t size() const { return rules_.size(); }

 private:
  std::vector<DiscardRule> rules_;
};

bool operator==(const DiscardRuleSet& a, const DiscardRuleSet& b);

// Built-in rules file content; also installed as data/discard_rules.txt.
std::string_view DefaultDiscardRulesText();

enum class LexiconKind { kPrepositions, kDictionary };

// Either a preposition list (lowercased words, possibly multi-word) or an
// abbreviation dictionary (case-preserving short form -> long form).
struct Lexicon {
  LexiconKind kind = LexiconKind::kPrepositions;
  std::set<std::string> words;
  std::map<std::string, std::string> entries;

  bool Contains(std::string_view lowercase_word) const {
    return words.count(std::string(lowercase_word)) > 0;
  }

  static Lexicon Parse(std::string_view contents, LexiconKind kind,
                       const std::string& source_name = "<memory>");
  static Lexicon Load(const std::string& path, LexiconKind kind);
  static Lexicon DefaultPrepositions();
};

std::string ReadFile(const std::string& path);

}  // namespace abbrev

#endif  // ABBREV_CONFIG_H_
