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

#include "abbrev/evaluation.h"

#include <cstdio>
#include <map>
#include <numeric>
#include <unordered_map>

#include "abbrev/error.h"
#include "abbrev/unicode.h"

namespace abbrev {

namespace {

struct DocPairs {
  std::vector<const GoldPair*> predicted;
  std::vector<const GoldPair*> gold;
};

std::string MatchKey(const GoldPair& p, MatchPolicy policy) {
  std::string key = NormalizeForMatch(p.sf_text);
  key += '\x1f';
  key += NormalizeForMatch(p.lf_text);
  if (policy == MatchPolicy::kSpan) {
    if (!p.sf_span) {
      throw InputError("span policy requires short-form spans (document " +
                       p.doc_id + ", " + p.sf_text + ")");
    }
    key += '\x1f' + std::to_string(p.sf_span->start) + ':' +
           std::to_string(p.sf_span->end);
  }
  return key;
}

std::vector<DocPairs> GroupByDocument(const std::vector<GoldPair>& predicted,
                                      const std::vector<GoldPair>& gold) {
  std::map<std::string, DocPairs> groups;
  for (const GoldPair& p : predicted) groups[p.doc_id].predicted.push_back(&p);
  for (const GoldPair& g : gold) groups[g.doc_id].gold.push_back(&g);
  std::vector<DocPairs> out;
  out.reserve(groups.size());
  for (auto& [id, group] : groups) out.push_back(std::move(group));
  return out;
}

Counts MatchDocument(const DocPairs& doc, MatchPolicy policy) {
  // Unused gold pairs per key, in document order.
  std::unordered_map<std::string, std::vector<size_t>> available;
  for (size_t g = doc.gold.size(); g-- > 0;) {
    available[MatchKey(*doc.gold[g], policy)].push_back(g);
  }
  Counts counts;
  for (const GoldPair* p : doc.predicted) {
    auto it = available.find(MatchKey(*p, policy));
    if (it != available.end() && !it->second.empty()) {
      it->second.pop_back();
      ++counts.tp;
    } else {
      ++counts.fp;
    }
  }
  counts.fn = static_cast<int64_t>(doc.gold.size()) - counts.tp;
  return counts;
}

Ratio Reduced(int64_t num, int64_t den) {
  const int64_t g = std::gcd(num, den);
  return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

}  // namespace

MatchPolicy ParseMatchPolicy(const std::string& name) {
  if (name == "text") return MatchPolicy::kText;
  if (name == "span") return MatchPolicy::kSpan;
  throw InputError("unknown match policy: " + name);
}

std::string NormalizeForMatch(std::string_view text) {
  std::u32string out;
  for (char32_t c : DecodeUtf8(text)) {
    if (!IsSpace(c)) out.push_back(FoldCase(c));
  }
  return EncodeUtf8(out);
}

Counts MatchPairs(const std::vector<GoldPair>& predicted,
                  const std::vector<GoldPair>& gold, MatchPolicy policy) {
  Counts total;
  for (const DocPairs& doc : GroupByDocument(predicted, gold)) {
    total += MatchDocument(doc, policy);
  }
  return total;
}

Counts MatchPairsParallel(const std::vector<GoldPair>& predicted,
                          const std::vector<GoldPair>& gold,
                          MatchPolicy policy) {
  const std::vector<DocPairs> docs = GroupByDocument(predicted, gold);
  // Validate up front so no exception escapes the parallel region.
  if (policy == MatchPolicy::kSpan) {
    for (const GoldPair& p : predicted) MatchKey(p, policy);
    for (const GoldPair& g : gold) MatchKey(g, policy);
  }
  int64_t tp = 0, fp = 0, fn = 0;
  const auto n = static_cast<int64_t>(docs.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : tp, fp, fn)
  for (int64_t i = 0; i < n; ++i) {
    const Counts c = MatchDocument(docs[static_cast<size_t>(i)], policy);
    tp += c.tp;
    fp += c.fp;
    fn += c.fn;
  }
  return {tp, fp, fn};
}

EvalReport ComputeMetrics(const Counts& counts) {
  EvalReport report;
  report.counts = counts;
  const int64_t predicted = counts.tp + counts.fp;
  const int64_t relevant = counts.tp + counts.fn;
  report.precision =
      predicted == 0 ? Ratio{1, 1} : Reduced(counts.tp, predicted);
  report.recall = relevant == 0 ? Ratio{1, 1} : Reduced(counts.tp, relevant);
  // 2PR / (P + R) with P = a/b, R = c/d is 2ac / (ad + cb).
  const Ratio& p = report.precision;
  const Ratio& r = report.recall;
  const int64_t den = p.num * r.den + r.num * p.den;
  report.f1 = den == 0 ? Ratio{0, 1} : Reduced(2 * p.num * r.num, den);
  return report;
}

nlohmann::json ToJson(const EvalReport& report) {
  return {{"tp", report.counts.tp},
          {"fp", report.counts.fp},
          {"fn", report.counts.fn},
          {"precision", report.precision.value()},
          {"recall", report.recall.value()},
          {"f1", report.f1.value()}};
}

std::string FormatTable(const EvalReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%-10s %8s %8s %8s\n%-10s %8lld %8lld %8lld\n"
                "%-10s %8s %8s %8s\n%-10s %8.4f %8.4f %8.4f\n",
                "", "tp", "fp", "fn", "counts",
                static_cast<long long>(report.counts.tp),
                static_cast<long long>(report.counts.fp),
                static_cast<long long>(report.counts.fn), "", "P", "R", "F1",
                "metrics", report.precision.value(), report.recall.value(),
                report.f1.value());
  return buf;
}

}  // namespace abbrev
