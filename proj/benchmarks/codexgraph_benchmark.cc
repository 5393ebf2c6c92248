// Copyright 2026 The codexgraph Authors.
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


#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "codexgraph/citations.h"
#include "codexgraph/communities.h"
#include "codexgraph/corpus.h"
#include "codexgraph/graph.h"
#include "codexgraph/metrics.h"
#include "codexgraph/synth.h"

namespace codexgraph {
namespace {

// The paper-sized graph: n = 980, m = 2186.
Graph PaperSized() { return GreatestComponent(SampleGnm(980, 2186, 1)); }

void BM_Betweenness(benchmark::State& state) {
  const Graph g = PaperSized();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Betweenness(g, threads));
  state.SetLabel("n=" + std::to_string(g.n()));
}
BENCHMARK(BM_Betweenness)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CharacteristicPathLength(benchmark::State& state) {
  const Graph g = PaperSized();
  for (auto _ : state) benchmark::DoNotOptimize(CharacteristicPathLength(g));
}
BENCHMARK(BM_CharacteristicPathLength)->Unit(benchmark::kMillisecond);

void BM_RandomBaseline(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(RandomBaseline(980, 2186, state.range(0), 7));
  }
}
BENCHMARK(BM_RandomBaseline)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ExtractAll(benchmark::State& state) {
  SynthParams params;
  params.books = 7;
  params.chapters_per_book = 4;
  params.articles_per_chapter = 35;
  params.p_in = 0.05;
  params.p_out = 0.002;
  const Corpus corpus = LoadCorpus(SynthesizeCorpus(params).document);
  size_t bytes = 0;
  for (const CorpusNode& node : corpus.nodes()) bytes += node.text.size();
  for (auto _ : state) benchmark::DoNotOptimize(ExtractAll(corpus));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_ExtractAll)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const Graph g = GreatestComponent(
      SampleGnm(state.range(0), 2 * state.range(0), 3));
  for (auto _ : state) benchmark::DoNotOptimize(ComputeSpectrum(g));
}
BENCHMARK(BM_Spectrum)->Arg(250)->Arg(980)->Unit(benchmark::kMillisecond);

void BM_DetectCommunities(benchmark::State& state) {
  const Graph g = PaperSized();
  const std::vector<double> scores = Betweenness(g);
  SpectralConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(DetectCommunities(g, scores, config));
  }
}
BENCHMARK(BM_DetectCommunities)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace codexgraph

BENCHMARK_MAIN();
