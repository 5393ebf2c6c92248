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

// Seeded synthetic corpora with a planted citation structure.

#ifndef CODEXGRAPH_SYNTH_H_
#define CODEXGRAPH_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace codexgraph {

// Each chapter is one planted block. Article pairs inside a chapter cite
// each other with probability p_in, all other pairs with p_out. Hubs are the
// first articles of the first hub_count chapters (round robin) and cite
// hub_degree further articles drawn uniformly.
struct SynthParams {
  size_t books = 4;
  size_t chapters_per_book = 1;
  size_t articles_per_chapter = 30;
  double p_in = 0.3;
  double p_out = 0.01;
  size_t hub_count = 0;
  size_t hub_degree = 0;
  uint64_t seed = 0;
};

struct SynthCorpus {
  std::string document;   // codexgraph-corpus-v1 JSON
  std::string truth_csv;  // `article,block` with block = chapter id
};

// Throws DomainError for invalid parameters.
SynthCorpus SynthesizeCorpus(const SynthParams& params);

}  // namespace codexgraph

#endif  // CODEXGRAPH_SYNTH_H_
