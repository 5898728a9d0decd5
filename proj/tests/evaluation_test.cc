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

#include "abbrev/error.h"
#include "doctest.h"

namespace abbrev {
namespace {

GoldPair P(const char* doc, const char* sf, const char* lf) {
  return {doc, sf, lf, std::nullopt, std::nullopt};
}

TEST_CASE("identity") {
  const std::vector<GoldPair> gold{P("d", "A", "a"), P("d", "B", "b"),
                                   P("e", "C", "c"), P("e", "D", "d")};
  CHECK(MatchPairs(gold, gold, MatchPolicy::kText) == Counts{4, 0, 0});
}

TEST_CASE("set difference") {
  CHECK(MatchPairs({P("d", "A", "a"), P("d", "B", "b")},
                   {P("d", "A", "a"), P("d", "C", "c")},
                   MatchPolicy::kText) == Counts{1, 1, 1});
}

TEST_CASE("whitespace and case are ignored under the text policy") {
  CHECK(NormalizeForMatch("2D 1H\tNMR") == "2d1hnmr");
  CHECK(MatchPairs({P("d", "2D1H NMR", "Proton  NMR")},
                   {P("d", "2D 1H NMR", "proton NMR")},
                   MatchPolicy::kText) == Counts{1, 0, 0});
}

TEST_CASE("documents are matched separately") {
  CHECK(MatchPairs({P("d", "A", "a")}, {P("e", "A", "a")},
                   MatchPolicy::kText) == Counts{0, 1, 1});
}

TEST_CASE("each gold pair matches at most once") {
  CHECK(MatchPairs({P("d", "A", "a"), P("d", "A", "a")}, {P("d", "A", "a")},
                   MatchPolicy::kText) == Counts{1, 1, 0});
  CHECK(MatchPairs({P("d", "A", "a")}, {P("d", "A", "a"), P("d", "A", "a")},
                   MatchPolicy::kText) == Counts{1, 0, 1});
}

TEST_CASE("span policy") {
  GoldPair g{"d", "ER", "endoplasmic reticulum", Span{23, 25}, Span{0, 21}};
  GoldPair p = g;
  CHECK(MatchPairs({p}, {g}, MatchPolicy::kSpan) == Counts{1, 0, 0});
  p.sf_span = Span{40, 42};
  CHECK(MatchPairs({p}, {g}, MatchPolicy::kSpan) == Counts{0, 1, 1});
  CHECK(MatchPairs({p}, {g}, MatchPolicy::kText) == Counts{1, 0, 0});
  CHECK_THROWS_AS(MatchPairs({P("d", "ER", "x")}, {g}, MatchPolicy::kSpan),
                  InputError);
  CHECK_THROWS_AS(MatchPairsParallel({g}, {P("d", "ER", "x")},
                                     MatchPolicy::kSpan),
                  InputError);
}

TEST_CASE("parallel matching agrees") {
  std::vector<GoldPair> pred, gold;
  for (int d = 0; d < 50; ++d) {
    const std::string doc = "d" + std::to_string(d);
    for (int k = 0; k < 4; ++k) {
      const std::string sf = "S" + std::to_string((d + k) % 5);
      gold.push_back({doc, sf, "long", std::nullopt, std::nullopt});
      if (k != d % 4) {
        pred.push_back({doc, "S" + std::to_string((d * k) % 5), "long",
                        std::nullopt, std::nullopt});
      }
    }
  }
  CHECK(MatchPairsParallel(pred, gold, MatchPolicy::kText) ==
        MatchPairs(pred, gold, MatchPolicy::kText));
}

TEST_CASE("policy names") {
  CHECK(ParseMatchPolicy("text") == MatchPolicy::kText);
  CHECK(ParseMatchPolicy("span") == MatchPolicy::kSpan);
  CHECK_THROWS_AS(ParseMatchPolicy("fuzzy"), InputError);
}

TEST_CASE("metrics") {
  SUBCASE("perfect") {
    const auto r = ComputeMetrics({2, 0, 0});
    CHECK(r.precision == Ratio{1, 1});
    CHECK(r.recall == Ratio{1, 1});
    CHECK(r.f1 == Ratio{1, 1});
  }
  SUBCASE("half") {
    const auto r = ComputeMetrics({1, 1, 1});
    CHECK(r.precision == Ratio{1, 2});
    CHECK(r.recall == Ratio{1, 2});
    CHECK(r.f1 == Ratio{1, 2});
  }
  SUBCASE("empty inputs") {
    const auto r = ComputeMetrics({0, 0, 0});
    CHECK(r.precision == Ratio{1, 1});
    CHECK(r.recall == Ratio{1, 1});
    CHECK(r.f1 == Ratio{1, 1});
  }
  SUBCASE("no true positives") {
    const auto r = ComputeMetrics({0, 3, 2});
    CHECK(r.precision == Ratio{0, 1});
    CHECK(r.recall == Ratio{0, 1});
    CHECK(r.f1 == Ratio{0, 1});
  }
  SUBCASE("exact harmonic mean") {
    // P = 39/40, R = 39/43: F1 = 2*39/(40+43) = 78/83.
    const auto r = ComputeMetrics({39, 1, 4});
    CHECK(r.f1 == Ratio{78, 83});
    CHECK(r.f1.num == 78);
  }
}

TEST_CASE("report output") {
  const auto r = ComputeMetrics({1, 1, 1});
  CHECK(ToJson(r).dump() ==
        R"({"f1":0.5,"fn":1,"fp":1,"precision":0.5,"recall":0.5,"tp":1})");
  const std::string table = FormatTable(r);
  CHECK(table.find("0.5000") != std::string::npos);
  CHECK(table.find("tp") != std::string::npos);
}

}  // namespace
}  // namespace abbrev
