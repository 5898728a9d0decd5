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

#include "abbrev/error.h"
#include "abbrev/unicode.h"
#include "doctest.h"

namespace abbrev {
namespace {

// "Cells of the endoplasmic reticulum (ER) swell. ER stress follows."
//  0         1         2         3         4         5
//  0123456789012345678901234567890123456789012345678901234567890
constexpr char kText[] =
    "Cells of the endoplasmic reticulum (ER) swell. ER stress follows.";

ResolvedPair Pair(Span lf, Span sf, double score) {
  ResolvedPair r;
  r.lf_doc_span = lf;
  r.sf_doc_span = sf;
  r.pair.score = score;
  return r;
}

TEST_CASE("project span") {
  CHECK(ProjectSpan(10, {2, 5}, 20) == Span{12, 15});
  CHECK(ProjectSpan(0, {0, 1}, 1) == Span{0, 1});
  CHECK_THROWS_AS(ProjectSpan(3, {0, 0}, 20), InvariantError);
  CHECK_THROWS_AS(ProjectSpan(10, {2, 15}, 20), InvariantError);
  CHECK_THROWS_AS(ProjectSpan(0, {5, 3}, 20), InvariantError);
}

TEST_CASE("format score") {
  CHECK(FormatScore(1.0) == "1");
  CHECK(FormatScore(0.8) == "0.8");
  CHECK(FormatScore(0.75) == "0.75");
}

TEST_CASE("pair annotations cross-reference each other") {
  const Document doc = Document::FromUtf8("d", kText);
  const auto anns = AnnotatePairs(doc, {Pair({13, 34}, {36, 38}, 1.0)});
  REQUIRE(anns.size() == 2);
  CHECK(anns[0].type == kLongForm);
  CHECK(anns[0].span == Span{13, 34});
  CHECK(anns[0].features ==
        FeatureMap{{"score", "1"}, {"shortForm", "ER"}});
  CHECK(anns[1].type == kShortForm);
  CHECK(anns[1].features ==
        FeatureMap{{"longForm", "endoplasmic reticulum"}, {"score", "1"}});
}

TEST_CASE("swapped pair orders annotations by position") {
  const Document doc = Document::FromUtf8("d", "ER (endoplasmic reticulum)");
  const auto anns = AnnotatePairs(doc, {Pair({4, 25}, {0, 2}, 1.0)});
  REQUIRE(anns.size() == 2);
  CHECK(anns[0].type == kShortForm);
  CHECK(anns[1].type == kLongForm);
}

TEST_CASE("pair spans are validated") {
  const Document doc = Document::FromUtf8("d", "short");
  CHECK_THROWS_AS(AnnotatePairs(doc, {Pair({0, 3}, {4, 9}, 1.0)}),
                  InvariantError);
}

TEST_CASE("semantic type propagation") {
  Document doc = Document::FromUtf8("d", kText);
  doc.annotations.push_back({{13, 34}, "Organelle", {}});
  doc.annotations.push_back({{0, 5}, "CellType", {}});
  const PairMentions mentions{{13, 34}, {36, 38}, {{47, 49}}};

  SUBCASE("enabled type") {
    const auto out =
        PropagateSemanticTypes(doc, {mentions}, {{"Organelle", "Gene"}});
    REQUIRE(out.size() == 2);
    CHECK(out[0] == Annotation{{36, 38}, "Organelle", {}});
    CHECK(out[1] == Annotation{{47, 49}, "Organelle", {}});
  }
  SUBCASE("type not in the configured set") {
    CHECK(PropagateSemanticTypes(doc, {mentions}, {{"Gene"}}).empty());
  }
  SUBCASE("empty set disables propagation") {
    CHECK(PropagateSemanticTypes(doc, {mentions}, {}).empty());
  }
  SUBCASE("annotation must contain the whole long form") {
    doc.annotations = {{{13, 24}, "Organelle", {}}};
    CHECK(PropagateSemanticTypes(doc, {mentions}, {{"Organelle"}}).empty());
  }
}

TEST_CASE("dictionary lookup") {
  Document doc = Document::FromUtf8("d", kText);
  doc.annotations.push_back({{36, 38}, std::string(kShortForm), {}});
  Lexicon dict{LexiconKind::kDictionary, {}, {{"ER", "endoplasmic reticulum"},
                                              {"stress", "strain"},
                                              {"ell", "x"}}};
  const auto out = AnnotateDictionary(doc, dict);
  REQUIRE(out.size() == 2);
  CHECK(out[0].span == Span{47, 49});
  CHECK(out[0].type == kDictionaryShortForm);
  CHECK(out[0].features.at("longForm") == "endoplasmic reticulum");
  CHECK(out[1].span == Span{50, 56});
  // Case-sensitive.
  doc.annotations.clear();
  Lexicon lower{LexiconKind::kDictionary, {}, {{"er", "x"}}};
  CHECK(AnnotateDictionary(doc, lower).empty());
}

TEST_CASE("standoff output") {
  Document doc = Document::FromUtf8("d1", "ER (endoplasmic reticulum)");
  doc.annotations = {{{0, 2}, "ShortForm", {{"longForm", "x"}}}};
  const nlohmann::json j = ToStandoffJson(doc);
  CHECK(j.dump() ==
        R"({"annotations":[{"end":2,"features":{"longForm":"x"},"start":0,)"
        R"("type":"ShortForm"}],"doc_id":"d1"})");
  doc.annotations.clear();
  CHECK(ToStandoffJson(doc).dump() == R"({"annotations":[],"doc_id":"d1"})");
}

TEST_CASE("inline output") {
  Document doc = Document::FromUtf8("d", "a<b (AB) & \"q\" AB");
  doc.annotations = {
      {{0, 3}, "LongForm", {{"shortForm", "AB"}, {"score", "1"}}},
      {{5, 7}, "ShortForm", {{"longForm", "a<b"}, {"score", "1"}}},
      {{15, 17}, "CorefShortForm", {{"longForm", "a<b"}}},
      {{0, 1}, "Organelle", {}},
  };
  CHECK(ToInline(doc) ==
        "<LongForm shortForm=\"AB\">a&lt;b</LongForm> (<ShortForm "
        "longForm=\"a&lt;b\">AB</ShortForm>) &amp; &quot;q&quot; "
        "<CorefShortForm longForm=\"a&lt;b\">AB</CorefShortForm>");
  doc.annotations.clear();
  CHECK(ToInline(doc) == XmlEscape("a<b (AB) & \"q\" AB"));
}

TEST_CASE("inline output drops crossing annotations") {
  Document doc = Document::FromUtf8("d", "abcdef");
  doc.annotations = {{{0, 4}, "LongForm", {}}, {{2, 6}, "ShortForm", {}}};
  CHECK(ToInline(doc) == "<LongForm>abcd</LongForm>ef");
}

}  // namespace
}  // namespace abbrev
