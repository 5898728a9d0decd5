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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "abbrev/evaluation.h"
#include "abbrev/pipeline.h"

namespace {

using namespace abbrev;

const char* const kSentences[] = {
    "We grew confluent SV40 transformed rabbit corneal epithelial cells "
    "(TRCEC) in culture.",
    "Spectra were recorded with two-dimensional proton nuclear magnetic "
    "resonance (2D 1H NMR).",
    "Proteins were separated by two-dimensional polyacrylamide gel "
    "electrophoresis (2D-PAGE).",
    "The TRCEC and 2D1H NMR data agree.",
    "Stress of the ER (endoplasmic reticulum) was measured in 2002.",
    "Levels of tumour necrosis factor (TNF) rose, and TNF remained high.",
};

std::vector<Document> MakeCorpus(int docs, int sentences_per_doc) {
  std::mt19937 rng(1);
  std::vector<Document> out;
  for (int d = 0; d < docs; ++d) {
    std::string text;
    for (int s = 0; s < sentences_per_doc; ++s) {
      if (s) text += ' ';
      text += kSentences[rng() % std::size(kSentences)];
    }
    out.push_back(Document::FromUtf8("d" + std::to_string(d), text));
  }
  return out;
}

void BM_ProcessCorpus(benchmark::State& state) {
  const auto docs = MakeCorpus(static_cast<int>(state.range(0)), 12);
  const Resources res;
  for (auto _ : state) benchmark::DoNotOptimize(ProcessCorpus(docs, res));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ProcessCorpusSerial(benchmark::State& state) {
  const auto docs = MakeCorpus(static_cast<int>(state.range(0)), 12);
  const Resources res;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ProcessCorpusSerial(docs, res));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<GoldPair> MakePairs(int docs, uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<GoldPair> out;
  for (int d = 0; d < docs; ++d) {
    for (int k = 0; k < 8; ++k) {
      const std::string sf = "SF" + std::to_string(rng() % 12);
      out.push_back({"d" + std::to_string(d), sf, "long form of " + sf,
                     std::nullopt, std::nullopt});
    }
  }
  return out;
}

void BM_MatchPairs(benchmark::State& state) {
  const auto pred = MakePairs(static_cast<int>(state.range(0)), 2);
  const auto gold = MakePairs(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MatchPairs(pred, gold, MatchPolicy::kText));
  }
}

void BM_MatchPairsParallel(benchmark::State& state) {
  const auto pred = MakePairs(static_cast<int>(state.range(0)), 2);
  const auto gold = MakePairs(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MatchPairsParallel(pred, gold, MatchPolicy::kText));
  }
}

BENCHMARK(BM_ProcessCorpus)->Arg(64)->Arg(512)->UseRealTime();
BENCHMARK(BM_ProcessCorpusSerial)->Arg(64)->Arg(512)->UseRealTime();
BENCHMARK(BM_MatchPairs)->Arg(256)->Arg(4096)->UseRealTime();
BENCHMARK(BM_MatchPairsParallel)->Arg(256)->Arg(4096)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
