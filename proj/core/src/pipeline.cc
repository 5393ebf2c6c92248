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

#include "codexgraph/pipeline.h"

#include <utility>

#include "codexgraph/error.h"
#include "codexgraph/random.h"
#include "report_json.h"

namespace codexgraph {
namespace {

using internal::Json;
using internal::Number;

// Rethrows the active exception with the stage name prefixed, keeping its
// type so callers can still map it to an exit code.
[[noreturn]] void RethrowInStage(std::string_view stage) {
  const std::string prefix = "stage '" + std::string(stage) + "': ";
  try {
    throw;
  } catch (const SchemaError& e) {
    throw SchemaError(prefix + e.what());
  } catch (const DuplicateIdError& e) {
    throw DuplicateIdError(prefix + e.what());
  } catch (const HierarchyError& e) {
    throw HierarchyError(prefix + e.what());
  } catch (const NormalizationError& e) {
    throw NormalizationError(prefix + e.what());
  } catch (const LookupError& e) {
    throw LookupError(prefix + e.what());
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(prefix + e.what());
  } catch (const UsageError& e) {
    throw UsageError(prefix + e.what());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(prefix + e.what());
  } catch (const std::exception& e) {
    throw Error(prefix + e.what());
  }
}

template <typename F>
auto InStage(std::string_view stage, F&& body) {
  try {
    return body();
  } catch (...) {
    RethrowInStage(stage);
  }
}

Json ConfigJson(const AnalysisConfig& config) {
  const MetricsConfig& mc = config.metrics;
  Json out;
  out["seed"] = config.seed;
  out["stage_seeds"] = {{"baseline", StageSeed(config.seed, "baseline")},
                        {"clustering", StageSeed(config.seed, "clustering")}};
  out["component"] = "greatest";
  Json metrics;
  metrics["c_policy"] = PolicyName(mc.policy);
  metrics["baseline_samples"] = mc.baseline_samples;
  metrics["l_ratio_max"] = Number(mc.thresholds.l_ratio_max);
  metrics["c_ratio_min"] = Number(mc.thresholds.c_ratio_min);
  metrics["tail_k_min"] = mc.tail.k_min;
  metrics["tail_k_max"] =
      mc.tail.k_max == 0 ? Json("max") : Json(mc.tail.k_max);
  metrics["degree_table_k"] = mc.degree_table_k;
  metrics["betweenness_table_k"] = mc.betweenness_table_k;
  metrics["rich_club_k"] = mc.rich_club_k;
  metrics["rich_club_threshold"] = Number(mc.rich_club_threshold);
  out["metrics"] = std::move(metrics);
  Json spectral = internal::SpectralConfigJson(config.spectral);
  spectral.erase("seed");
  spectral["enabled"] = config.communities;
  out["communities"] = std::move(spectral);
  return out;
}

Json MetricsJson(const MetricsReport& r, const MetricsConfig& config) {
  Json out;
  out["n"] = r.n;
  out["m"] = r.m;
  out["density"] = Number(r.density);
  out["char_path_length"] = Number(r.char_path_length);
  out["clustering"] = r.clustering ? Number(*r.clustering) : Json();
  out["clustering_policy"] = PolicyName(config.policy);

  Json points = Json::array();
  for (const DegreePoint& p : r.degrees.points) {
    points.push_back(
        {{"k", p.k}, {"count", p.count}, {"cum_prob", Number(p.cum_prob)}});
  }
  Json fit;
  fit["k_min"] = r.degrees.window.k_min;
  fit["k_max"] = r.degrees.window.k_max;
  fit["slope"] = r.degrees.tail_slope ? Number(*r.degrees.tail_slope) : Json();
  out["degree_distribution"] = {{"points", std::move(points)},
                                {"tail_fit", std::move(fit)}};

  Json degrees = Json::array();
  for (const DegreeRow& row : r.degree_table) {
    degrees.push_back({{"vertex", row.vertex}, {"degree", row.degree}});
  }
  out["degree_table"] = std::move(degrees);
  Json between = Json::array();
  for (const BetweennessRow& row : r.betweenness_table) {
    between.push_back({{"vertex", row.vertex},
                       {"betweenness", Number(row.score)},
                       {"degree", row.degree}});
  }
  out["betweenness_table"] = std::move(between);

  Json club;
  club["k"] = r.rich_club.members.size();
  club["members"] = r.rich_club.members;
  club["internal_edges"] = r.rich_club.internal_edges;
  club["internal_density"] = Number(r.rich_club.internal_density);
  club["threshold"] = Number(r.rich_club.threshold);
  club["is_rich_club"] = r.rich_club.is_rich_club;
  out["rich_club"] = std::move(club);
  return out;
}

Json BaselineJson(const BaselineStats& b, size_t n, size_t m) {
  Json out;
  out["model"] = "G(n,m)";
  out["n"] = n;
  out["m"] = m;
  out["samples"] = b.samples;
  out["seed"] = b.seed;
  out["l_mean"] = Number(b.l_mean);
  out["l_sd"] = Number(b.l_sd);
  out["c_mean"] = Number(b.c_mean);
  out["c_sd"] = Number(b.c_sd);
  return out;
}

Json SmallWorldJson(const SmallWorldVerdict& v) {
  Json out;
  out["l"] = Number(v.l);
  out["c"] = Number(v.c);
  out["l_ratio"] = Number(v.l_ratio);
  out["c_ratio"] = Number(v.c_ratio);
  out["l_ratio_max"] = Number(v.thresholds.l_ratio_max);
  out["c_ratio_min"] = Number(v.thresholds.c_ratio_min);
  out["is_small_world"] = v.is_small_world;
  return out;
}

}  // namespace

std::string_view ToolVersion() { return CODEXGRAPH_VERSION; }

uint64_t StageSeed(uint64_t seed, std::string_view stage) {
  return DeriveSeed(seed, stage);
}

AnalysisReport RunPipeline(const Corpus& corpus, const AnalysisConfig& config) {
  AnalysisReport report;
  report.census = Census(corpus);
  report.corpus_fingerprint = CorpusFingerprint(corpus);

  const ExtractionReport refs =
      InStage("citations", [&] { return ExtractAll(corpus, config.threads); });
  report.citations = {refs.resolved.size(), refs.external_dropped.size(),
                      refs.unparsed.size(), refs.self_refs.size()};

  const Graph graph = InStage("graph", [&] { return BuildGraph(corpus, refs); });
  report.n = graph.n();
  report.m = graph.m();
  report.isolated = IsolatedCensus(graph, corpus);
  report.component_sizes = Components(graph).sizes;
  const Graph giant = GreatestComponent(graph);
  report.greatest_n = giant.n();
  report.greatest_m = giant.m();

  if (giant.n() < 2) {
    report.metrics_status = "greatest component has " +
                            std::to_string(giant.n()) +
                            (giant.n() == 1 ? " vertex" : " vertices") +
                            "; metrics need at least 2";
    report.communities_status = "skipped: no metrics";
    return report;
  }

  MetricsConfig mc = config.metrics;
  mc.baseline_seed = StageSeed(config.seed, "baseline");
  mc.threads = config.threads;
  report.metrics = InStage("metrics", [&] { return ComputeMetrics(giant, mc); });

  if (!config.communities) {
    report.communities_status = "disabled";
    return report;
  }
  SpectralConfig sc = config.spectral;
  sc.seed = StageSeed(config.seed, "clustering");
  try {
    report.communities = InStage("communities", [&] {
      return DetectCommunities(giant, report.metrics->betweenness, sc,
                               config.threads);
    });
  } catch (const DomainError& e) {
    // Too small or too sparse to partition; the rest of the report stands.
    report.communities_status = e.what();
  }
  return report;
}

AnalysisReport RunPipelineFile(const std::string& corpus_path,
                               const AnalysisConfig& config) {
  const Corpus corpus =
      InStage("corpus", [&] { return LoadCorpusFile(corpus_path); });
  return RunPipeline(corpus, config);
}

std::string ConfigEcho(const AnalysisConfig& config) {
  return ConfigJson(config).dump();
}

uint64_t ConfigHash(const AnalysisConfig& config) {
  return Fnv1a64(ConfigEcho(config));
}

uint64_t CorpusFingerprint(const Corpus& corpus) {
  return Fnv1a64(SerializeCorpus(corpus));
}

std::string ReportJson(const AnalysisReport& report,
                       const AnalysisConfig& config, const Corpus& corpus) {
  Json doc;
  doc["tool"] = {{"name", "codexgraph"}, {"version", ToolVersion()}};
  doc["config"] = ConfigJson(config);
  doc["config_hash"] = internal::Hex64(ConfigHash(config));
  doc["corpus_fingerprint"] = internal::Hex64(report.corpus_fingerprint);

  Json census;
  for (int i = 0; i < kNumNodeKinds; ++i) {
    census[std::string(KindName(static_cast<NodeKind>(i)))] =
        report.census.counts[i];
  }
  census["total"] = report.census.total();
  doc["census"] = std::move(census);
  doc["citations"] = {{"resolved", report.citations.resolved},
                      {"external_dropped", report.citations.external_dropped},
                      {"unparsed", report.citations.unparsed},
                      {"self_refs", report.citations.self_refs}};

  Json graph;
  graph["n"] = report.n;
  graph["m"] = report.m;
  graph["isolated"] = {{"total", report.isolated.total},
                       {"headings", report.isolated.headings},
                       {"articles", report.isolated.articles}};
  graph["component_count"] = report.component_sizes.size();
  graph["component_sizes"] = report.component_sizes;
  graph["greatest_component"] = {{"n", report.greatest_n},
                                 {"m", report.greatest_m}};
  doc["graph"] = std::move(graph);

  const auto& metrics = report.metrics;
  doc["metrics"] = metrics ? MetricsJson(*metrics, config.metrics) : Json();
  doc["metrics_status"] = report.metrics_status;
  doc["baseline"] = metrics ? BaselineJson(metrics->baseline, metrics->n,
                                           metrics->m)
                            : Json();
  doc["small_world"] = metrics && metrics->small_world
                           ? SmallWorldJson(*metrics->small_world)
                           : Json();
  doc["communities"] =
      report.communities
          ? internal::PartitionJson(*report.communities, corpus,
                                    config.spectral.eigengap_max_k + 1)
          : Json();
  doc["communities_status"] = report.communities_status;
  return doc.dump(1) + "\n";
}

}  // namespace codexgraph
