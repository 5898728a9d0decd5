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

#include "abbrev/annotation.h"

#include <algorithm>
#include <charconv>

#include "abbrev/error.h"
#include "abbrev/unicode.h"

namespace abbrev {

namespace {

bool IsPipelineType(std::string_view type) {
  return type == kLongForm || type == kShortForm || type == kCorefShortForm ||
         type == kDictionaryShortForm;
}

bool IsInlineType(std::string_view type) { return IsPipelineType(type); }

std::string_view InlineAttribute(std::string_view type) {
  return type == kLongForm ? "shortForm" : "longForm";
}

}  // namespace

Span ProjectSpan(size_t sentence_start, const Span& local,
                 size_t document_length) {
  Span span{sentence_start + local.start, sentence_start + local.end};
  CheckSpan(span, document_length);
  return span;
}

std::string FormatScore(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::vector<Annotation> AnnotatePairs(const Document& doc,
                                      const std::vector<ResolvedPair>& pairs) {
  std::vector<Annotation> out;
  out.reserve(pairs.size() * 2);
  for (const ResolvedPair& p : pairs) {
    CheckSpan(p.lf_doc_span, doc.size());
    CheckSpan(p.sf_doc_span, doc.size());
    const std::string score = FormatScore(p.pair.score);
    Annotation lf{p.lf_doc_span, std::string(kLongForm), {}};
    lf.features["shortForm"] = CoveredTextUtf8(doc, p.sf_doc_span);
    lf.features["score"] = score;
    Annotation sf{p.sf_doc_span, std::string(kShortForm), {}};
    sf.features["longForm"] = CoveredTextUtf8(doc, p.lf_doc_span);
    sf.features["score"] = score;
    out.push_back(std::move(lf));
    out.push_back(std::move(sf));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Annotation& a, const Annotation& b) {
                     return a.span.start < b.span.start;
                   });
  return out;
}

std::vector<Annotation> PropagateSemanticTypes(
    const Document& doc, const std::vector<PairMentions>& pairs,
    const PropagationConfig& config) {
  std::vector<Annotation> out;
  if (config.propagatable_types.empty()) return out;
  std::set<std::pair<Span, std::string>> seen;
  auto emit = [&](const Span& span, const std::string& type) {
    if (seen.emplace(span, type).second) {
      out.push_back(Annotation{span, type, {}});
    }
  };
  for (const PairMentions& pair : pairs) {
    for (const Annotation& existing : doc.annotations) {
      if (IsPipelineType(existing.type)) continue;
      if (!config.propagatable_types.count(existing.type)) continue;
      if (!existing.span.Contains(pair.lf_span)) continue;
      emit(pair.sf_span, existing.type);
      for (const Span& s : pair.coref_spans) emit(s, existing.type);
    }
  }
  return out;
}

std::vector<Annotation> AnnotateDictionary(const Document& doc,
                                           const Lexicon& dictionary) {
  std::vector<Span> blocked;
  for (const Annotation& a : doc.annotations) {
    if (a.type == kLongForm || a.type == kShortForm ||
        a.type == kCorefShortForm) {
      blocked.push_back(a.span);
    }
  }

  struct Entry {
    std::u32string sf;
    const std::string* lf;
  };
  std::vector<Entry> entries;
  for (const auto& [sf, lf] : dictionary.entries) {
    entries.push_back({DecodeUtf8(sf), &lf});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     return a.sf.size() > b.sf.size();
                   });

  std::vector<Annotation> out;
  for (const Entry& entry : entries) {
    const bool word_start = IsWordChar(entry.sf.front());
    const bool word_end = IsWordChar(entry.sf.back());
    size_t pos = doc.text.find(entry.sf);
    while (pos != std::u32string::npos) {
      const Span span{pos, pos + entry.sf.size()};
      const bool bounded =
          (!word_start || pos == 0 || !IsWordChar(doc.text[pos - 1])) &&
          (!word_end || span.end == doc.size() ||
           !IsWordChar(doc.text[span.end]));
      const bool taken = std::any_of(
          blocked.begin(), blocked.end(),
          [&](const Span& b) { return b.Overlaps(span); });
      if (bounded && !taken) {
        blocked.push_back(span);
        Annotation a{span, std::string(kDictionaryShortForm), {}};
        a.features["longForm"] = *entry.lf;
        out.push_back(std::move(a));
      }
      pos = doc.text.find(entry.sf, pos + 1);
    }
  }
  std::sort(out.begin(), out.end(), AnnotationLess);
  return out;
}

nlohmann::json ToStandoffJson(const Document& doc) {
  nlohmann::json annotations = nlohmann::json::array();
  for (const Annotation& a : doc.annotations) {
    nlohmann::json features = nlohmann::json::object();
    for (const auto& [k, v] : a.features) features[k] = v;
    annotations.push_back({{"start", a.span.start},
                           {"end", a.span.end},
                           {"type", a.type},
                           {"features", features}});
  }
  return {{"doc_id", doc.id}, {"annotations", annotations}};
}

std::string XmlEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string ToInline(const Document& doc) {
  std::vector<const Annotation*> selected;
  for (const Annotation& a : doc.annotations) {
    if (IsInlineType(a.type)) selected.push_back(&a);
  }
  std::stable_sort(selected.begin(), selected.end(),
                   [](const Annotation* a, const Annotation* b) {
                     return AnnotationLess(*a, *b);
                   });

  // Keep only annotations that nest properly.
  std::vector<const Annotation*> nested;
  std::vector<const Annotation*> stack;
  for (const Annotation* a : selected) {
    while (!stack.empty() && stack.back()->span.end <= a->span.start) {
      stack.pop_back();
    }
    if (!stack.empty() && !stack.back()->span.Contains(a->span)) continue;
    if (!stack.empty() && stack.back()->span == a->span &&
        stack.back()->type == a->type) {
      continue;
    }
    stack.push_back(a);
    nested.push_back(a);
  }

  std::string out;
  std::vector<const Annotation*> open;
  size_t next = 0;
  auto text_between = [&](size_t from, size_t to) {
    out += XmlEscape(EncodeUtf8(std::u32string_view(doc.text).substr(
        from, to - from)));
  };
  size_t pos = 0;
  while (pos <= doc.size()) {
    // Close elements ending here, innermost first.
    while (!open.empty() && open.back()->span.end == pos) {
      out += "</" + open.back()->type + ">";
      open.pop_back();
    }
    while (next < nested.size() && nested[next]->span.start == pos) {
      const Annotation* a = nested[next++];
      out += "<" + a->type;
      const std::string attr(InlineAttribute(a->type));
      if (auto it = a->features.find(attr); it != a->features.end()) {
        out += " " + attr + "=\"" + XmlEscape(it->second) + "\"";
      }
      out += ">";
      open.push_back(a);
    }
    if (pos == doc.size()) break;
    size_t stop = doc.size();
    if (next < nested.size()) stop = std::min(stop, nested[next]->span.start);
    if (!open.empty()) stop = std::min(stop, open.back()->span.end);
    text_between(pos, stop);
    pos = stop;
  }
  return out;
}

}  // namespace abbrev
