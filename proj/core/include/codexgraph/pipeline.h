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

// End-to-end analysis of a corpus and its JSON report.

#ifndef CODEXGRAPH_PIPELINE_H_
#define CODEXGRAPH_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codexgraph/citations.h"
#include "codexgraph/communities.h"
#include "codexgraph/corpus.h"
#include "codexgraph/graph.h"
#include "codexgraph/metrics.h"

namespace codexgraph {

std::string_view ToolVersion();

// Stage seeds derived from one user seed.
uint64_t StageSeed(uint64_t seed, std::string_view stage);

struct AnalysisConfig {
  uint64_t seed = 42;
  // Seed fields inside `metrics` and `spectral` are overwritten with stage
  // seeds; `threads` never changes a reported number.
  MetricsConfig metrics;
  SpectralConfig spectral;
  bool communities = true;
  int threads = 1;
};

struct CitationCounts {
  size_t resolved = 0;
  size_t external_dropped = 0;
  size_t unparsed = 0;
  size_t self_refs = 0;
};

struct AnalysisReport {
  KindCounts census;
  CitationCounts citations;
  size_t n = 0;
  size_t m = 0;
  IsolatedCounts isolated;
  std::vector<size_t> component_sizes;
  size_t greatest_n = 0;
  size_t greatest_m = 0;
  // Absent, with a status message, when the greatest component has fewer
  // than two vertices or a stage cannot run.
  std::optional<MetricsReport> metrics;
  std::string metrics_status = "ok";
  std::optional<CommunityResult> communities;
  std::string communities_status = "ok";
  uint64_t corpus_fingerprint = 0;
};

// extract -> build -> greatest component -> metrics and baseline ->
// communities. Errors are rethrown with the stage name prefixed.
AnalysisReport RunPipeline(const Corpus& corpus, const AnalysisConfig& config);
AnalysisReport RunPipelineFile(const std::string& corpus_path,
                               const AnalysisConfig& config);

// Every parameter that can influence a reported number.
std::string ConfigEcho(const AnalysisConfig& config);
uint64_t ConfigHash(const AnalysisConfig& config);

// FNV-1a 64 of the canonical serialization.
uint64_t CorpusFingerprint(const Corpus& corpus);

// Byte-stable JSON report.
std::string ReportJson(const AnalysisReport& report,
                       const AnalysisConfig& config, const Corpus& corpus);

}  // namespace codexgraph

#endif  // CODEXGRAPH_PIPELINE_H_
