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

#include "abbrev/corpus.h"

#include <algorithm>
#include <charconv>
#include <map>

#include "abbrev/config.h"
#include "abbrev/error.h"
#include "abbrev/unicode.h"

namespace abbrev {

namespace {

struct Element {
  std::u32string name;
  std::string id;
  size_t raw_location = 0;
  size_t clean_start = 0;
  size_t clean_end = 0;
};

struct Tag {
  bool closing = false;
  std::u32string name;
  std::u32string attributes;
  size_t end = 0;  // one past '>'
};

// Parses a tag starting at raw[pos] == '<'. Returns nullopt when the text is
// not tag-shaped: '<', optional '/', a letter, and '>' before any '<' or
// newline.
std::optional<Tag> ParseTag(std::u32string_view raw, size_t pos) {
  Tag tag;
  size_t p = pos + 1;
  if (p < raw.size() && raw[p] == '/') {
    tag.closing = true;
    ++p;
  }
  size_t name_start = p;
  while (p < raw.size() && IsLetter(raw[p])) ++p;
  if (p == name_start) return std::nullopt;
  tag.name = raw.substr(name_start, p - name_start);
  size_t q = p;
  while (q < raw.size() && raw[q] != '>' && raw[q] != '<' && raw[q] != '\n') {
    ++q;
  }
  if (q >= raw.size() || raw[q] != '>') return std::nullopt;
  tag.attributes = raw.substr(p, q - p);
  tag.end = q + 1;
  return tag;
}

// Value of the id attribute, quoted or bare; nullopt if absent or empty.
std::optional<std::string> IdAttribute(std::u32string_view attrs) {
  size_t p = 0;
  while (p < attrs.size()) {
    while (p < attrs.size() && IsSpace(attrs[p])) ++p;
    size_t name_start = p;
    while (p < attrs.size() && (IsWordChar(attrs[p]) || attrs[p] == '-')) ++p;
    std::u32string name = FoldCase(attrs.substr(name_start, p - name_start));
    while (p < attrs.size() && IsSpace(attrs[p])) ++p;
    if (p >= attrs.size() || attrs[p] != '=') {
      if (p == name_start) ++p;
      continue;
    }
    ++p;
    while (p < attrs.size() && IsSpace(attrs[p])) ++p;
    std::u32string value;
    if (p < attrs.size() && (attrs[p] == '"' || attrs[p] == '\'')) {
      const char32_t quote = attrs[p++];
      size_t close = attrs.find(quote, p);
      if (close == std::u32string_view::npos) return std::nullopt;
      value = attrs.substr(p, close - p);
      p = close + 1;
    } else {
      size_t v = p;
      while (p < attrs.size() && !IsSpace(attrs[p]) && attrs[p] != '/') ++p;
      value = attrs.substr(v, p - v);
    }
    if (name == U"id") {
      if (value.empty()) return std::nullopt;
      return EncodeUtf8(value);
    }
  }
  return std::nullopt;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

size_t ParseOffset(std::string_view field, const std::string& where) {
  size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InputError(where + ": offset is not a non-negative integer: '" +
                     std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string_view IssueKindName(IssueKind kind) {
  switch (kind) {
    case IssueKind::kMalformedTag: return "malformed-tag";
    case IssueKind::kMismatchedId: return "mismatched-id";
    case IssueKind::kUnclosedTag: return "unclosed-tag";
    case IssueKind::kOrphanShort: return "orphan-short";
    case IssueKind::kOrphanLong: return "orphan-long";
    case IssueKind::kBadSpan: return "bad-span";
  }
  return "unknown";
}

nlohmann::json ToJson(const ParseIssue& issue) {
  return {{"kind", IssueKindName(issue.kind)},
          {"location", issue.location},
          {"detail", issue.detail}};
}

BiotextParse ParseBiotext(std::string_view raw_utf8, const std::string& doc_id) {
  const std::u32string raw = DecodeUtf8(raw_utf8);
  BiotextParse result;
  std::vector<Element> stack;
  std::vector<Element> longs;
  std::vector<Element> shorts;
  auto issue = [&](IssueKind kind, size_t location, std::string detail) {
    result.issues.push_back({kind, location, std::move(detail)});
  };

  size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] != '<') {
      result.clean_text.push_back(raw[i++]);
      continue;
    }
    std::optional<Tag> tag = ParseTag(raw, i);
    if (!tag) {
      // A known element name without a closing '>' is still a defect.
      std::u32string_view rest = std::u32string_view(raw).substr(i + 1);
      if (rest.starts_with(U"/")) rest.remove_prefix(1);
      if (rest.starts_with(U"Long") || rest.starts_with(U"Short")) {
        issue(IssueKind::kMalformedTag, i, "tag is not terminated by '>'");
      }
      result.clean_text.push_back(raw[i++]);
      continue;
    }
    const std::string name = EncodeUtf8(tag->name);
    const bool known = tag->name == U"Long" || tag->name == U"Short";
    if (!known) {
      issue(IssueKind::kMalformedTag, i, "unknown element <" + name + ">");
    } else if (!tag->closing) {
      Element e;
      e.name = tag->name;
      e.raw_location = i;
      e.clean_start = result.clean_text.size();
      if (auto id = IdAttribute(tag->attributes)) {
        e.id = *id;
      } else {
        issue(IssueKind::kMalformedTag, i,
              "<" + name + "> has a missing or malformed id attribute");
      }
      stack.push_back(std::move(e));
    } else {
      auto it = std::find_if(stack.rbegin(), stack.rend(),
                             [&](const Element& e) { return e.name == tag->name; });
      if (it == stack.rend()) {
        issue(IssueKind::kMalformedTag, i,
              "closing </" + name + "> without an open element");
      } else {
        if (it != stack.rbegin()) {
          issue(IssueKind::kMalformedTag, i,
                "closing </" + name + "> does not match the innermost element");
        }
        // Elements opened after the matched one are never closed.
        while (stack.back().name != tag->name) {
          issue(IssueKind::kUnclosedTag, stack.back().raw_location,
                "<" + EncodeUtf8(stack.back().name) + "> is not closed");
          stack.pop_back();
        }
        Element e = std::move(stack.back());
        stack.pop_back();
        e.clean_end = result.clean_text.size();
        if (e.clean_end == e.clean_start) {
          issue(IssueKind::kMalformedTag, e.raw_location,
                "<" + name + "> element is empty");
        } else if (!e.id.empty()) {
          (e.name == U"Long" ? longs : shorts).push_back(std::move(e));
        }
      }
    }
    i = tag->end;
  }
  for (const Element& e : stack) {
    issue(IssueKind::kUnclosedTag, e.raw_location,
          "<" + EncodeUtf8(e.name) + "> is not closed");
  }

  auto by_position = [](const Element& a, const Element& b) {
    return a.clean_start < b.clean_start;
  };
  std::sort(longs.begin(), longs.end(), by_position);
  std::sort(shorts.begin(), shorts.end(), by_position);

  std::vector<int> partner(longs.size(), -1);
  std::vector<bool> used(shorts.size(), false);
  // Nearest following Short with the same id, not past the next Long that
  // reuses the id.
  for (size_t l = 0; l < longs.size(); ++l) {
    size_t stop = SIZE_MAX;
    for (size_t m = l + 1; m < longs.size(); ++m) {
      if (longs[m].id == longs[l].id) {
        stop = longs[m].clean_start;
        break;
      }
    }
    for (size_t s = 0; s < shorts.size(); ++s) {
      if (used[s] || shorts[s].clean_start < longs[l].clean_start) continue;
      if (shorts[s].clean_start >= stop) break;
      if (shorts[s].id == longs[l].id) {
        partner[l] = static_cast<int>(s);
        used[s] = true;
        break;
      }
    }
  }
  // Reverse-order markup: nearest preceding unpaired Short.
  for (size_t l = 0; l < longs.size(); ++l) {
    if (partner[l] >= 0) continue;
    size_t floor = 0;
    for (size_t m = l; m-- > 0;) {
      if (longs[m].id == longs[l].id) {
        floor = longs[m].clean_start;
        break;
      }
    }
    for (size_t s = shorts.size(); s-- > 0;) {
      if (used[s] || shorts[s].clean_start >= longs[l].clean_start) continue;
      if (shorts[s].clean_start < floor) break;
      if (shorts[s].id == longs[l].id) {
        partner[l] = static_cast<int>(s);
        used[s] = true;
        break;
      }
    }
  }

  for (size_t l = 0; l < longs.size(); ++l) {
    const Element& lf = longs[l];
    if (partner[l] < 0) {
      // The Short right after this Long (before any other Long) carries a
      // different id.
      const size_t next_long =
          l + 1 < longs.size() ? longs[l + 1].clean_start : SIZE_MAX;
      for (const Element& s : shorts) {
        if (s.clean_start < lf.clean_start) continue;
        if (s.clean_start < next_long && s.id != lf.id) {
          issue(IssueKind::kMismatchedId, s.raw_location,
                "<Long id=" + lf.id + "> is followed by <Short id=" + s.id +
                    ">");
        }
        break;
      }
      issue(IssueKind::kOrphanLong, lf.raw_location,
            "<Long id=" + lf.id + "> has no matching <Short>");
      continue;
    }
    const Element& sf = shorts[static_cast<size_t>(partner[l])];
    GoldPair pair;
    pair.doc_id = doc_id;
    pair.lf_span = Span{lf.clean_start, lf.clean_end};
    pair.sf_span = Span{sf.clean_start, sf.clean_end};
    pair.lf_text = EncodeUtf8(std::u32string_view(result.clean_text)
                                  .substr(lf.clean_start, lf.clean_end - lf.clean_start));
    pair.sf_text = EncodeUtf8(std::u32string_view(result.clean_text)
                                  .substr(sf.clean_start, sf.clean_end - sf.clean_start));
    result.pairs.push_back(std::move(pair));
  }
  for (size_t s = 0; s < shorts.size(); ++s) {
    if (!used[s]) {
      issue(IssueKind::kOrphanShort, shorts[s].raw_location,
            "<Short id=" + shorts[s].id + "> has no matching <Long>");
    }
  }
  std::stable_sort(result.issues.begin(), result.issues.end(),
                   [](const ParseIssue& a, const ParseIssue& b) {
                     return a.location < b.location;
                   });
  std::stable_sort(result.pairs.begin(), result.pairs.end(),
                   [](const GoldPair& a, const GoldPair& b) {
                     return std::min(a.lf_span->start, a.sf_span->start) <
                            std::min(b.lf_span->start, b.sf_span->start);
                   });
  return result;
}

std::vector<GoldPair> ParseGoldTsv(std::string_view contents,
                                   const std::string& source_name) {
  std::vector<GoldPair> pairs;
  size_t pos = 0;
  int line_no = 0;
  while (pos < contents.size()) {
    size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = source_name + ":" + std::to_string(line_no);
    const auto fields = SplitTabs(line);
    if (fields.size() != 3 && fields.size() != 7) {
      throw InputError(where + ": expected 3 or 7 tab-separated fields, got " +
                       std::to_string(fields.size()));
    }
    GoldPair pair{std::string(fields[0]), std::string(fields[1]),
                  std::string(fields[2]), std::nullopt, std::nullopt};
    if (pair.doc_id.empty() || pair.sf_text.empty() || pair.lf_text.empty()) {
      throw InputError(where + ": empty field");
    }
    if (fields.size() == 7) {
      pair.sf_span = Span{ParseOffset(fields[3], where),
                          ParseOffset(fields[4], where)};
      pair.lf_span = Span{ParseOffset(fields[5], where),
                          ParseOffset(fields[6], where)};
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<GoldPair> LoadGoldTsv(const std::string& path) {
  return ParseGoldTsv(ReadFile(path), path);
}

std::vector<ParseIssue> ValidateGold(const std::vector<GoldPair>& pairs,
                                     const std::vector<Document>& docs) {
  std::map<std::string, const Document*> by_id;
  for (const Document& d : docs) by_id.emplace(d.id, &d);

  std::vector<ParseIssue> issues;
  for (const GoldPair& pair : pairs) {
    auto it = by_id.find(pair.doc_id);
    if (it == by_id.end()) {
      issues.push_back({IssueKind::kOrphanLong, 0,
                        "unknown document id '" + pair.doc_id + "' for " +
                            pair.sf_text + " / " + pair.lf_text});
      continue;
    }
    const Document& doc = *it->second;
    auto check = [&](const std::optional<Span>& span, const std::string& text,
                     std::string_view role) {
      if (!span) return;
      const bool in_bounds =
          span->start < span->end && span->end <= doc.size();
      if (in_bounds && CoveredTextUtf8(doc, *span) == text) return;
      std::string detail = std::string(role) + " span [" +
                           std::to_string(span->start) + "," +
                           std::to_string(span->end) + ") in " + doc.id;
      detail += in_bounds ? " covers '" + CoveredTextUtf8(doc, *span) +
                                "', expected '" + text + "'"
                          : " is out of bounds";
      issues.push_back({IssueKind::kBadSpan,
                        std::min(span->start, doc.size()), detail});
    };
    check(pair.sf_span, pair.sf_text, "short form");
    check(pair.lf_span, pair.lf_text, "long form");
  }
  return issues;
}

}  // namespace abbrev
