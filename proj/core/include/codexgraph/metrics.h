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

// Structural indices of a citation network and its random-graph baseline.

#ifndef CODEXGRAPH_METRICS_H_
#define CODEXGRAPH_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codexgraph/graph.h"

namespace codexgraph {

// How vertices of degree < 2 enter the clustering coefficient.
enum class LowDegreePolicy { kExclude, kZero };

std::string_view PolicyName(LowDegreePolicy policy);
std::optional<LowDegreePolicy> ParsePolicy(std::string_view name);

// 2m / (n(n-1)). Throws DomainError for n < 2.
double Density(size_t n, size_t m);
double Density(const Graph& graph);

// Mean hop distance from each vertex to all others. Throws DomainError if
// the graph is disconnected or has fewer than 2 vertices.
std::vector<double> MeanDistances(const Graph& graph, int threads = 1);

// Median of MeanDistances; the mean of the two middle values for even n.
double CharacteristicPathLength(const Graph& graph, int threads = 1);

// Edge density among the neighbours of v; 0 for degree < 2.
double LocalClustering(const Graph& graph, size_t v);

// Mean local clustering. Throws DomainError when the policy leaves no
// vertex to average over.
double ClusteringCoefficient(const Graph& graph,
                             LowDegreePolicy policy = LowDegreePolicy::kExclude);

struct DegreePoint {
  size_t k = 0;
  size_t count = 0;
  double cum_prob = 0;  // P(degree >= k)
};

// Degree window of the log-log tail fit; k_max = 0 means the maximum degree.
struct TailFitWindow {
  size_t k_min = 1;
  size_t k_max = 0;
};

struct DegreeDistribution {
  std::vector<DegreePoint> points;  // every k from min to max degree
  std::vector<std::pair<double, double>> loglog_points;  // k >= 1
  TailFitWindow window;  // as resolved
  // Least-squares slope of log10 P(>=k) on log10 k inside the window;
  // absent with fewer than two points.
  std::optional<double> tail_slope;
};

// Throws DomainError for an empty graph.
DegreeDistribution ComputeDegreeDistribution(const Graph& graph,
                                             TailFitWindow window = {});

// `k,count,cum_prob` with %.6g numbers.
std::string DegreeDistributionCsv(const DegreeDistribution& dist);

// Unnormalized betweenness, each unordered pair counted once. Sources are
// processed in fixed blocks so the result is identical for any thread count.
std::vector<double> Betweenness(const Graph& graph, int threads = 1);

struct BetweennessRow {
  NodeId vertex;
  double score = 0;
  size_t degree = 0;
};

// Top-k by score, ties by id. Throws DomainError for k < 1.
std::vector<BetweennessRow> BetweennessTable(const Graph& graph,
                                             const std::vector<double>& scores,
                                             size_t k);

struct RichClubResult {
  std::vector<NodeId> members;
  size_t internal_edges = 0;
  double internal_density = 0;
  double threshold = 0.5;
  bool is_rich_club = false;
};

// Density of the subgraph induced by the top-k degree vertices. Throws
// DomainError unless 2 <= k <= n.
RichClubResult RichClubCheck(const Graph& graph, size_t k,
                             double threshold = 0.5);

// Uniform simple graph with n vertices and m edges. Throws DomainError when
// m > n(n-1)/2.
Graph SampleGnm(size_t n, size_t m, uint64_t seed);

struct BaselineStats {
  size_t samples = 0;
  uint64_t seed = 0;
  double l_mean = 0;
  double l_sd = 0;
  double c_mean = 0;
  double c_sd = 0;
};

// G(n,m) samples: L on each sample's greatest component, C with the exclude
// policy. Standard deviations use the n-1 denominator (0 for one sample).
BaselineStats RandomBaseline(size_t n, size_t m, size_t samples, uint64_t seed,
                             int threads = 1);

struct SmallWorldThresholds {
  double l_ratio_max = 2.0;
  double c_ratio_min = 10.0;
};

struct SmallWorldVerdict {
  double l = 0;
  double c = 0;
  double l_ratio = 0;
  double c_ratio = 0;  // +inf when the baseline C is 0 and C > 0
  SmallWorldThresholds thresholds;
  bool is_small_world = false;
};

SmallWorldVerdict SmallWorldReport(double l, double c,
                                   const BaselineStats& baseline,
                                   SmallWorldThresholds thresholds = {});
// Computes L and C of a connected graph first.
SmallWorldVerdict SmallWorldReport(
    const Graph& graph, const BaselineStats& baseline,
    SmallWorldThresholds thresholds = {},
    LowDegreePolicy policy = LowDegreePolicy::kExclude, int threads = 1);

struct MetricsConfig {
  LowDegreePolicy policy = LowDegreePolicy::kExclude;
  size_t baseline_samples = 30;
  uint64_t baseline_seed = 0;
  SmallWorldThresholds thresholds;
  TailFitWindow tail;
  size_t degree_table_k = 9;
  size_t betweenness_table_k = 8;
  size_t rich_club_k = 8;
  double rich_club_threshold = 0.5;
  int threads = 1;
};

struct MetricsReport {
  size_t n = 0;
  size_t m = 0;
  double density = 0;
  double char_path_length = 0;
  // Absent when the policy leaves no vertex to average over; the verdict
  // is then absent too.
  std::optional<double> clustering;
  BaselineStats baseline;
  std::optional<SmallWorldVerdict> small_world;
  DegreeDistribution degrees;
  std::vector<DegreeRow> degree_table;
  std::vector<double> betweenness;  // per vertex
  std::vector<BetweennessRow> betweenness_table;
  RichClubResult rich_club;  // k clamped to n
};

// Everything above for one connected graph with at least 2 vertices.
MetricsReport ComputeMetrics(const Graph& graph, const MetricsConfig& config);

}  // namespace codexgraph

#endif  // CODEXGRAPH_METRICS_H_
