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

// codexgraph command-line tool.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "codexgraph/citations.h"
#include "codexgraph/communities.h"
#include "codexgraph/corpus.h"
#include "codexgraph/error.h"
#include "codexgraph/export.h"
#include "codexgraph/graph.h"
#include "codexgraph/metrics.h"
#include "codexgraph/pipeline.h"
#include "codexgraph/synth.h"

namespace codexgraph {
namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kNumerical = 3 };

class OutputError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  uint64_t seed = 42;
  std::string out;
  bool quiet = false;
  int threads = 1;
};

void Write(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << content;
  if (!file) throw OutputError("cannot write '" + path + "'");
}

void Note(const Globals& g, const std::string& line) {
  if (!g.quiet) std::cerr << line << "\n";
}

std::optional<size_t> ParseK(const std::string& text) {
  if (text == "auto") return std::nullopt;
  size_t pos = 0;
  unsigned long long k = 0;
  try {
    k = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || k < 2) {
    throw UsageError("--k expects 'auto' or an integer >= 2, got '" + text +
                     "'");
  }
  return static_cast<size_t>(k);
}

Graph SelectComponent(const Graph& graph, const std::string& component) {
  if (component == "greatest") return GreatestComponent(graph);
  if (component == "all") return graph;
  throw UsageError("--component expects 'greatest' or 'all'");
}

struct MetricsOptions {
  std::string policy = "exclude";
  std::string component = "greatest";
};

CLI::Validator AtLeastTwo() {
  return CLI::Range(size_t{2}, SIZE_MAX).description(">=2");
}

void AddMetricsOptions(CLI::App* sub, MetricsConfig& mc, MetricsOptions& mo) {
  sub->add_option("--component", mo.component,
                  "Analyzed component (metrics need 'greatest')")
      ->check(CLI::IsMember({"greatest"}));
  sub->add_option("--baseline-samples", mc.baseline_samples,
                  "G(n,m) samples in the random baseline")
      ->check(CLI::PositiveNumber);
  sub->add_option("--c-policy", mo.policy,
                  "Clustering treatment of degree < 2 vertices")
      ->check(CLI::IsMember({"exclude", "zero"}));
  sub->add_option("--l-ratio-max", mc.thresholds.l_ratio_max,
                  "Small-world bound on L / L_random");
  sub->add_option("--c-ratio-min", mc.thresholds.c_ratio_min,
                  "Small-world bound on C / C_random");
  sub->add_option("--tail-k-min", mc.tail.k_min, "Tail fit: smallest degree");
  sub->add_option("--tail-k-max", mc.tail.k_max,
                  "Tail fit: largest degree (0: maximum degree)");
  sub->add_option("--degree-table", mc.degree_table_k, "Rows of the degree table")
      ->check(CLI::PositiveNumber);
  sub->add_option("--betweenness-table", mc.betweenness_table_k,
                  "Rows of the betweenness table")
      ->check(CLI::PositiveNumber);
  sub->add_option("--rich-club-k", mc.rich_club_k, "Size of the rich-club set")
      ->check(AtLeastTwo());
  sub->add_option("--rich-club-threshold", mc.rich_club_threshold,
                  "Internal density above which the set is a rich club");
}

void AddSpectralOptions(CLI::App* sub, SpectralConfig& sc, std::string& k) {
  sub->add_option("--centrals", sc.centrals_removed,
                  "Top-betweenness vertices removed before clustering");
  sub->add_option("--k", k, "Community count, or 'auto' (eigengap)");
  sub->add_option("--max-k", sc.eigengap_max_k, "Upper bound for --k auto")
      ->check(AtLeastTwo());
  sub->add_option("--restarts", sc.kmeans_restarts, "k-means restarts")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-iterations", sc.kmeans_max_iterations,
                  "k-means iteration cap")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--weighted", sc.weighted,
                "Use citation multiplicities as Laplacian weights");
}

int Run(int argc, char** argv) {
  CLI::App app{"Citation network analysis of a legal code", "codexgraph"};
  app.set_version_flag("--version", std::string(ToolVersion()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed of all random stages");
  app.add_option("--out", g.out, "Output path (default: standard output)");
  app.add_flag("--quiet", g.quiet, "No progress messages on standard error");
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string corpus_path;
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("corpus", corpus_path, "Corpus JSON file")->required();
  };

  // citations
  CLI::App* citations =
      app.add_subcommand("citations", "Extract and resolve references (CSV)");
  add_corpus(citations);

  // graph
  CLI::App* graph_cmd =
      app.add_subcommand("graph", "Export the citation network");
  add_corpus(graph_cmd);
  std::string component = "all";
  std::string format = "graphml";
  graph_cmd->add_option("--component", component, "'greatest' or 'all'")
      ->check(CLI::IsMember({"greatest", "all"}));
  graph_cmd->add_option("--format", format, "graphml, dot, json or csv");

  // metrics
  MetricsConfig mc;
  MetricsOptions mo;
  std::string degdist_csv;
  CLI::App* metrics = app.add_subcommand(
      "metrics", "Structural indices of the greatest component (JSON)");
  add_corpus(metrics);
  AddMetricsOptions(metrics, mc, mo);
  metrics->add_option("--csv", degdist_csv,
                      "Also write the degree distribution as CSV");

  // communities
  SpectralConfig sc;
  std::string k_text = "auto";
  std::string community_graph;
  std::string community_format = "dot";
  CLI::App* communities = app.add_subcommand(
      "communities", "Spectral communities of the greatest component");
  add_corpus(communities);
  AddSpectralOptions(communities, sc, k_text);
  communities->add_option("--community-graph", community_graph,
                          "Also write the community-level graph");
  communities->add_option("--community-format", community_format,
                          "dot, graphml or json");

  // analyze
  CLI::App* analyze =
      app.add_subcommand("analyze", "Full pipeline report (JSON)");
  add_corpus(analyze);
  AddMetricsOptions(analyze, mc, mo);
  AddSpectralOptions(analyze, sc, k_text);
  bool no_communities = false;
  analyze->add_flag("--no-communities", no_communities,
                    "Skip community detection");
  analyze->add_option("--csv", degdist_csv,
                      "Also write the degree distribution as CSV");

  // synth
  SynthParams params;
  std::string truth_path;
  CLI::App* synth =
      app.add_subcommand("synth", "Generate a planted synthetic corpus");
  synth->add_option("--books", params.books, "Books (one planted block per chapter)")->check(CLI::PositiveNumber);
  synth->add_option("--chapters-per-book", params.chapters_per_book,
                    "Chapters in every book")
      ->check(CLI::PositiveNumber);
  synth->add_option("--articles-per-chapter", params.articles_per_chapter,
                    "Articles in every chapter")
      ->check(CLI::PositiveNumber);
  synth->add_option("--p-in", params.p_in, "Intra-chapter citation probability")
      ->check(CLI::Range(0.0, 1.0));
  synth->add_option("--p-out", params.p_out, "Other-pair citation probability")
      ->check(CLI::Range(0.0, 1.0));
  synth->add_option("--hub-count", params.hub_count, "Planted hubs");
  synth->add_option("--hub-degree", params.hub_degree, "Citations per hub");
  synth->add_option("--truth", truth_path,
                    "Write the planted block of every article (CSV)");

  // export
  CLI::App* export_cmd = app.add_subcommand(
      "export", "Export the network or its community graph");
  add_corpus(export_cmd);
  std::string what = "graph";
  export_cmd->add_option("--what", what, "'graph' or 'communities'")
      ->check(CLI::IsMember({"graph", "communities"}));
  export_cmd->add_option("--format", format, "graphml, dot, json or csv");
  export_cmd->add_option("--component", component, "'greatest' or 'all'")
      ->check(CLI::IsMember({"greatest", "all"}));
  AddSpectralOptions(export_cmd, sc, k_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  mc.policy = *ParsePolicy(mo.policy);
  mc.threads = g.threads;
  sc.k = ParseK(k_text);

  AnalysisConfig config;
  config.seed = g.seed;
  config.metrics = mc;
  config.spectral = sc;
  config.threads = g.threads;

  if (*synth) {
    params.seed = StageSeed(g.seed, "synth");
    const SynthCorpus corpus = SynthesizeCorpus(params);
    Write(g.out, corpus.document);
    if (!truth_path.empty()) Write(truth_path, corpus.truth_csv);
    Note(g, "synthetic corpus: " +
                std::to_string(params.books * params.chapters_per_book *
                               params.articles_per_chapter) +
                " articles");
    return kOk;
  }

  const Corpus corpus = LoadCorpusFile(corpus_path);
  if (*analyze || *metrics) {
    config.communities = *analyze && !no_communities;
    const AnalysisReport report = RunPipeline(corpus, config);
    Write(g.out, ReportJson(report, config, corpus));
    if (!degdist_csv.empty() && report.metrics) {
      Write(degdist_csv, DegreeDistributionCsv(report.metrics->degrees));
    }
    Note(g, "n=" + std::to_string(report.greatest_n) +
                " m=" + std::to_string(report.greatest_m) +
                " (greatest component); metrics: " + report.metrics_status +
                (*analyze ? "; communities: " + report.communities_status
                          : ""));
    return kOk;
  }

  const ExtractionReport refs = ExtractAll(corpus, g.threads);
  if (*citations) {
    Write(g.out, CitationsCsv(corpus, refs));
    Note(g, std::to_string(refs.resolved.size()) + " resolved, " +
                std::to_string(refs.external_dropped.size()) + " external, " +
                std::to_string(refs.unparsed.size()) + " unparsed, " +
                std::to_string(refs.self_refs.size()) + " self");
    return kOk;
  }

  const Graph full = BuildGraph(corpus, refs);
  const ExportFormat fmt = ParseFormat(format);
  if (*graph_cmd || (*export_cmd && what == "graph")) {
    const Graph selected = SelectComponent(full, component);
    Write(g.out, ExportGraph(selected, &corpus, fmt));
    Note(g, "exported " + std::to_string(selected.n()) + " vertices, " +
                std::to_string(selected.m()) + " edges");
    return kOk;
  }

  // communities, or export --what communities
  const Graph giant = GreatestComponent(full);
  if (giant.n() < 2) {
    throw DomainError("greatest component has fewer than 2 vertices");
  }
  sc.seed = StageSeed(g.seed, "clustering");
  const CommunityResult result =
      DetectCommunities(giant, Betweenness(giant, g.threads), sc, g.threads);
  if (*communities) {
    Write(g.out, ExportPartition(result, sc, corpus));
    if (!community_graph.empty()) {
      Write(community_graph,
            ExportCommunityGraph(result.partition, corpus,
                                 ParseFormat(community_format)));
    }
  } else {
    Write(g.out, ExportCommunityGraph(result.partition, corpus, fmt));
  }
  Note(g, std::to_string(result.partition.communities.size()) +
              " communities (k=" + std::to_string(result.k) + ")");
  return kOk;
}

}  // namespace
}  // namespace codexgraph

int main(int argc, char** argv) {
  using namespace codexgraph;
  try {
    return Run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "codexgraph: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "codexgraph: " << e.what() << "\n";
    return kNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "codexgraph: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "codexgraph: " << e.what() << "\n";
    return kInput;
  }
}
