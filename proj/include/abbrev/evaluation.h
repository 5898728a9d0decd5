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

#ifndef ABBREV_EVALUATION_H_
#define ABBREV_EVALUATION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "abbrev/corpus.h"
#include "json.hpp"

namespace abbrev {

enum class MatchPolicy {
  kText,  // whitespace-free, case-folded SF and LF text
  kSpan,  // text plus identical SF span
};

MatchPolicy ParseMatchPolicy(const std::string& name);

struct Counts {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t fn = 0;

  Counts& operator+=(const Counts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const Counts&, const Counts&) = default;
};

// Exact non-negative fraction.
struct Ratio {
  int64_t num = 0;
  int64_t den = 1;

  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num * b.den == b.num * a.den;
  }
};

struct EvalReport {
  Counts counts;
  Ratio precision;
  Ratio recall;
  Ratio f1;
};

// Removes all whitespace and case-folds.
std::string NormalizeForMatch(std::string_view text);

// Greedy one-to-one matching within each document: every prediction takes
// the first unused gold pair with an equal key. Throws InputError under the
// span policy when a pair lacks an SF span.
Counts MatchPairs(const std::vector<GoldPair>& predicted,
                  const std::vector<GoldPair>& gold, MatchPolicy policy);

// Same counts as MatchPairs, with documents scored in parallel.
Counts MatchPairsParallel(const std::vector<GoldPair>& predicted,
                          const std::vector<GoldPair>& gold,
                          MatchPolicy policy);

// precision = tp/(tp+fp), 1 when nothing was predicted; recall = tp/(tp+fn),
// 1 when there is no gold; f1 = harmonic mean, 0 when both are 0.
EvalReport ComputeMetrics(const Counts& counts);

nlohmann::json ToJson(const EvalReport& report);
std::string FormatTable(const EvalReport& report);

}  // namespace abbrev

#endif  // ABBREV_EVALUATION_H_
