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

// Independent reference computations used by the tests. Nothing here calls
// into the library's matching or scoring code; inputs are plain ASCII.

#ifndef ABBREV_TESTS_ORACLE_H_
#define ABBREV_TESTS_ORACLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oracle {

// Letters of `text`, lowercased.
std::string Letters(std::string_view text);

// Largest number of SF letters that can be matched, in order, to distinct
// increasing LF letters. Exhaustive over all subsets of SF letters.
int OptimalAlignment(std::string_view lf, std::string_view sf);

// Two-pointer rendering of the greedy forward scan.
int GreedyMatches(std::string_view lf, std::string_view sf);

struct OraclePair {
  std::string sf;
  std::string lf;
  double score = 0;
};

// Brute-force extraction of the single bracketed pair of an ASCII sentence
// at default parameters, default discard conditions and prepositions.
// nullopt when no candidate survives.
std::optional<OraclePair> ExtractSingle(const std::string& sentence,
                                        double threshold = 0.8);

struct Item {
  std::string doc;
  std::string key;
};

// tp/fp/fn from a maximum bipartite matching over equal (doc, key) items.
struct Confusion {
  long tp = 0, fp = 0, fn = 0;
};
Confusion BruteForceConfusion(const std::vector<Item>& predicted,
                              const std::vector<Item>& gold);

}  // namespace oracle

#endif  // ABBREV_TESTS_ORACLE_H_
