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

#include "abbrev/config.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "abbrev/error.h"
#include "abbrev/unicode.h"

namespace abbrev {

namespace {

constexpr std::string_view kDefaultRules =
    "# Short-form discard rules. One ECMAScript regular expression per line,\n"
    "# searched against the candidate short form, optionally followed by a TAB\n"
    "# and a description. A leading (?i) makes the rule case-insensitive.\n"
    "(?i)^(of|in|for|with|on|at|by|to|from|as|into|during|including|until|"
    "against|among|throughout)\\b\tstarts with a preposition\n"
    "^\\d(.*\\d)?$\tstarts and ends with a digit\n";

constexpr std::string_view kDefaultPrepositions =
    "of\nin\nfor\nwith\non\nat\nby\nto\nfrom\nas\ninto\nduring\nincluding\n"
    "until\nagainst\namong\nthroughout\nof the\n";

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> Lines(std::string_view contents) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= contents.size()) {
    size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

int ParsePositive(const std::string& key, const std::string& value) {
  int out = 0;
  std::string_view v = Trim(value);
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw InputError(key + ": expected an integer, got '" + value + "'");
  }
  if (out < 1) throw InputError(key + " must be positive, got " + value);
  return out;
}

double ParseThreshold(const std::string& value) {
  double out = 0;
  std::string_view v = Trim(value);
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw InputError("threshold: expected a number, got '" + value + "'");
  }
  if (!(out > 0.0 && out <= 1.0)) {
    throw InputError("threshold out of range (0, 1]: " + value);
  }
  return out;
}

bool ParseBool(const std::string& key, const std::string& value) {
  std::string v = ToLowerUtf8(Trim(value));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw InputError(key + ": expected a boolean, got '" + value + "'");
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Params LoadParams(const KeyValues& args) {
  Params params;
  bool outer_chars_given = false;
  for (const auto& [key, value] : args) {
    if (key == "maxOuterWords") {
      params.max_outer_words = ParsePositive(key, value);
    } else if (key == "maxInnerChars") {
      params.max_inner_chars = ParsePositive(key, value);
    } else if (key == "maxOuterChars") {
      params.max_outer_chars = ParsePositive(key, value);
      outer_chars_given = true;
    } else if (key == "threshold") {
      params.threshold = ParseThreshold(value);
    } else if (key == "coreferenceEnabled") {
      params.coreference_enabled = ParseBool(key, value);
    } else if (key == "dictionaryEnabled") {
      params.dictionary_enabled = ParseBool(key, value);
    } else {
      throw InputError("unknown parameter: " + key);
    }
  }
  if (!outer_chars_given) params.max_outer_chars = params.max_outer_words * 4;
  return params;
}

Params LoadParams(const KeyValues& file_args, const KeyValues& cli_args) {
  KeyValues merged = file_args;
  merged.insert(merged.end(), cli_args.begin(), cli_args.end());
  return LoadParams(merged);
}

KeyValues ReadKeyValueFile(const std::string& path) {
  const std::string contents = ReadFile(path);
  KeyValues out;
  int line_no = 0;
  for (std::string_view line : Lines(contents)) {
    ++line_no;
    std::string_view t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": expected key = value");
    }
    out.emplace_back(std::string(Trim(t.substr(0, eq))),
                     std::string(Trim(t.substr(eq + 1))));
  }
  return out;
}

DiscardRuleSet DiscardRuleSet::Parse(std::string_view contents,
                                     const std::string& source_name) {
  DiscardRuleSet set;
  int line_no = 0;
  for (std::string_view line : Lines(contents)) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    DiscardRule rule;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      rule.pattern = std::string(line);
    } else {
      rule.pattern = std::string(line.substr(0, tab));
      rule.description = std::string(Trim(line.substr(tab + 1)));
    }
    std::string_view body = rule.pattern;
    auto flags = std::regex::ECMAScript | std::regex::optimize;
    if (body.starts_with("(?i)")) {
      body.remove_prefix(4);
      flags |= std::regex::icase;
    }
    try {
      rule.compiled = std::regex(std::string(body), flags);
    } catch (const std::regex_error& e) {
      throw InputError(source_name + ":" + std::to_string(line_no) +
                       ": invalid pattern '" + rule.pattern + "': " + e.what());
    }
    set.rules_.push_back(std::move(rule));
  }
  return set;
}

DiscardRuleSet DiscardRuleSet::Load(const std::string& path) {
  return Parse(ReadFile(path), path);
}

DiscardRuleSet DiscardRuleSet::Defaults() {
  return Parse(kDefaultRules, "<builtin>");
}

std::string DiscardRuleSet::Serialize() const {
  std::string out;
  for (const auto& rule : rules_) {
    out += rule.pattern;
    if (!rule.description.empty()) {
      out += '\t';
      out += rule.description;
    }
    out += '\n';
  }
  return out;
}

int DiscardRuleSet::FirstMatch(std::string_view short_form) const {
  for (size_t i = 0; i < rules_.size(); ++i) {
    if (std::regex_search(short_form.begin(), short_form.end(),
                          rules_[i].compiled)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

bool operator==(const DiscardRuleSet& a, const DiscardRuleSet& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.rules()[i].pattern != b.rules()[i].pattern ||
        a.rules()[i].description != b.rules()[i].description) {
      return false;
    }
  }
  return true;
}

std::string_view DefaultDiscardRulesText() { return kDefaultRules; }

Lexicon Lexicon::Parse(std::string_view contents, LexiconKind kind,
                       const std::string& source_name) {
  Lexicon lex;
  lex.kind = kind;
  int line_no = 0;
  for (std::string_view line : Lines(contents)) {
    ++line_no;
    const std::string where = source_name + ":" + std::to_string(line_no);
    if (kind == LexiconKind::kPrepositions) {
      std::string_view word = Trim(line);
      if (word.empty()) continue;
      lex.words.insert(ToLowerUtf8(word));
      continue;
    }
    if (Trim(line).empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw InputError(where + ": dictionary line has no tab separator");
    }
    std::string sf(Trim(line.substr(0, tab)));
    std::string lf(Trim(line.substr(tab + 1)));
    if (sf.empty() || lf.empty()) {
      throw InputError(where + ": empty dictionary field");
    }
    if (!lex.entries.emplace(sf, lf).second) {
      throw InputError(where + ": duplicate dictionary short form '" + sf +
                       "'");
    }
  }
  return lex;
}

Lexicon Lexicon::Load(const std::string& path, LexiconKind kind) {
  return Parse(ReadFile(path), kind, path);
}

Lexicon Lexicon::DefaultPrepositions() {
  return Parse(kDefaultPrepositions, LexiconKind::kPrepositions, "<builtin>");
}

}  // namespace abbrev
