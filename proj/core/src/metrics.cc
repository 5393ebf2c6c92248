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

#include "codexgraph/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>

#include "codexgraph/error.h"
#include "codexgraph/parallel.h"
#include "codexgraph/random.h"

namespace codexgraph {
namespace {

constexpr size_t kUnreached = std::numeric_limits<size_t>::max();

// Hop distances from s; kUnreached for other components.
void Bfs(const Graph& graph, size_t s, std::vector<size_t>& dist,
         std::vector<size_t>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[s] = 0;
  queue.push_back(s);
  for (size_t head = 0; head < queue.size(); ++head) {
    const size_t v = queue[head];
    for (size_t w : graph.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
}

// Number of source blocks used by the parallel sweeps; depends only on n so
// the summation order is fixed.
size_t BlockCount(size_t n) { return std::min<size_t>(n, 64); }

std::pair<size_t, size_t> BlockRange(size_t block, size_t blocks, size_t n) {
  return {block * n / blocks, (block + 1) * n / blocks};
}

double Median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t k = values.size();
  return k % 2 ? values[k / 2] : (values[k / 2 - 1] + values[k / 2]) / 2;
}

void MeanAndSd(const std::vector<double>& xs, double& mean, double& sd) {
  mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  if (xs.size() < 2) {
    sd = 0;
    return;
  }
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  sd = std::sqrt(ss / (xs.size() - 1));
}

}  // namespace

std::string_view PolicyName(LowDegreePolicy policy) {
  return policy == LowDegreePolicy::kExclude ? "exclude" : "zero";
}

std::optional<LowDegreePolicy> ParsePolicy(std::string_view name) {
  if (name == "exclude") return LowDegreePolicy::kExclude;
  if (name == "zero") return LowDegreePolicy::kZero;
  return std::nullopt;
}

double Density(size_t n, size_t m) {
  if (n < 2) throw DomainError("density needs at least 2 vertices");
  return 2.0 * static_cast<double>(m) /
         (static_cast<double>(n) * static_cast<double>(n - 1));
}

double Density(const Graph& graph) { return Density(graph.n(), graph.m()); }

std::vector<double> MeanDistances(const Graph& graph, int threads) {
  const size_t n = graph.n();
  if (n < 2) throw DomainError("path length needs at least 2 vertices");
  std::vector<double> means(n);
  const size_t blocks = BlockCount(n);
  ParallelForBlocks(blocks, ResolveThreadCount(threads), [&](size_t b) {
    std::vector<size_t> dist(n), queue;
    const auto [begin, end] = BlockRange(b, blocks, n);
    for (size_t s = begin; s < end; ++s) {
      Bfs(graph, s, dist, queue);
      if (queue.size() != n) {
        throw DomainError("path length is undefined on a disconnected graph");
      }
      size_t total = 0;
      for (size_t d : dist) total += d;
      means[s] = static_cast<double>(total) / static_cast<double>(n - 1);
    }
  });
  return means;
}

double CharacteristicPathLength(const Graph& graph, int threads) {
  return Median(MeanDistances(graph, threads));
}

double LocalClustering(const Graph& graph, size_t v) {
  const auto& nv = graph.neighbors(v);
  const size_t d = nv.size();
  if (d < 2) return 0;
  size_t links = 0;
  for (size_t u : nv) {
    // Sorted intersection of N(u) and N(v); each link is seen twice.
    const auto& nu = graph.neighbors(u);
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++links;
        ++a;
        ++b;
      }
    }
  }
  return static_cast<double>(links) / static_cast<double>(d * (d - 1));
}

double ClusteringCoefficient(const Graph& graph, LowDegreePolicy policy) {
  double sum = 0;
  size_t count = 0;
  for (size_t v = 0; v < graph.n(); ++v) {
    if (graph.degree(v) < 2 && policy == LowDegreePolicy::kExclude) continue;
    sum += LocalClustering(graph, v);
    ++count;
  }
  if (count == 0) {
    throw DomainError(
        "clustering coefficient is undefined: no vertex to average over");
  }
  return sum / static_cast<double>(count);
}

DegreeDistribution ComputeDegreeDistribution(const Graph& graph,
                                             TailFitWindow window) {
  const size_t n = graph.n();
  if (n == 0) throw DomainError("degree distribution of an empty graph");
  size_t k_min = graph.degree(0), k_max = graph.degree(0);
  for (size_t v = 0; v < n; ++v) {
    k_min = std::min(k_min, graph.degree(v));
    k_max = std::max(k_max, graph.degree(v));
  }
  std::vector<size_t> count(k_max + 1, 0);
  for (size_t v = 0; v < n; ++v) ++count[graph.degree(v)];

  DegreeDistribution out;
  size_t at_least = n;
  for (size_t k = k_min; k <= k_max; ++k) {
    out.points.push_back(
        {k, count[k], static_cast<double>(at_least) / static_cast<double>(n)});
    at_least -= count[k];
  }
  out.window = window;
  if (out.window.k_max == 0) out.window.k_max = k_max;
  std::vector<std::pair<double, double>> fit;
  for (const DegreePoint& p : out.points) {
    if (p.k == 0) continue;
    const std::pair<double, double> xy = {std::log10(static_cast<double>(p.k)),
                                          std::log10(p.cum_prob)};
    out.loglog_points.push_back(xy);
    if (p.k >= out.window.k_min && p.k <= out.window.k_max) fit.push_back(xy);
  }
  if (fit.size() >= 2) {
    double mx = 0, my = 0;
    for (const auto& [x, y] : fit) {
      mx += x;
      my += y;
    }
    mx /= fit.size();
    my /= fit.size();
    double sxy = 0, sxx = 0;
    for (const auto& [x, y] : fit) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    if (sxx > 0) out.tail_slope = sxy / sxx;
  }
  return out;
}

std::string DegreeDistributionCsv(const DegreeDistribution& dist) {
  std::string out = "k,count,cum_prob\n";
  char buf[64];
  for (const DegreePoint& p : dist.points) {
    std::snprintf(buf, sizeof(buf), "%zu,%zu,%.6g\n", p.k, p.count,
                  p.cum_prob);
    out += buf;
  }
  return out;
}

std::vector<double> Betweenness(const Graph& graph, int threads) {
  const size_t n = graph.n();
  const size_t blocks = BlockCount(n);
  std::vector<std::vector<double>> partial(blocks);
  ParallelForBlocks(blocks, ResolveThreadCount(threads), [&](size_t b) {
    std::vector<double>& acc = partial[b];
    acc.assign(n, 0.0);
    std::vector<size_t> dist(n), order;
    std::vector<double> sigma(n), delta(n);
    const auto [begin, end] = BlockRange(b, blocks, n);
    for (size_t s = begin; s < end; ++s) {
      std::fill(sigma.begin(), sigma.end(), 0.0);
      std::fill(delta.begin(), delta.end(), 0.0);
      Bfs(graph, s, dist, order);
      sigma[s] = 1;
      for (size_t v : order) {
        for (size_t w : graph.neighbors(v)) {
          if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
      }
      // Dependencies accumulate in reverse BFS order.
      for (size_t i = order.size(); i-- > 1;) {
        const size_t w = order[i];
        for (size_t v : graph.neighbors(w)) {
          if (dist[v] + 1 == dist[w]) {
            delta[v] += sigma[v] / sigma[w] * (1 + delta[w]);
          }
        }
        acc[w] += delta[w];
      }
    }
  });
  std::vector<double> scores(n, 0.0);
  for (const auto& acc : partial) {
    for (size_t v = 0; v < n; ++v) scores[v] += acc[v];
  }
  for (double& s : scores) s /= 2;
  return scores;
}

std::vector<BetweennessRow> BetweennessTable(const Graph& graph,
                                             const std::vector<double>& scores,
                                             size_t k) {
  if (k < 1) throw DomainError("betweenness table needs k >= 1");
  if (scores.size() != graph.n()) {
    throw ConsistencyError("betweenness scores do not match the graph");
  }
  std::vector<BetweennessRow> rows;
  rows.reserve(graph.n());
  for (size_t v = 0; v < graph.n(); ++v) {
    rows.push_back({graph.vertex(v), scores[v], graph.degree(v)});
  }
  const size_t top = std::min(k, rows.size());
  std::partial_sort(rows.begin(), rows.begin() + top, rows.end(),
                    [](const BetweennessRow& a, const BetweennessRow& b) {
                      if (a.score != b.score) return a.score > b.score;
                      return a.vertex < b.vertex;
                    });
  rows.resize(top);
  return rows;
}

RichClubResult RichClubCheck(const Graph& graph, size_t k, double threshold) {
  if (k < 2 || k > graph.n()) {
    throw DomainError("rich-club check needs 2 <= k <= n");
  }
  RichClubResult out;
  for (DegreeRow& row : DegreeTable(graph, k)) {
    out.members.push_back(std::move(row.vertex));
  }
  const Graph club = InducedSubgraph(graph, out.members);
  out.internal_edges = club.m();
  out.internal_density = Density(club);
  out.threshold = threshold;
  out.is_rich_club = out.internal_density >= threshold;
  return out;
}

Graph SampleGnm(size_t n, size_t m, uint64_t seed) {
  const uint64_t pairs =
      n < 2 ? 0 : static_cast<uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) {
    throw DomainError("G(n,m) needs m <= n(n-1)/2");
  }
  // Rejection-sample whichever of the edge set and its complement is
  // smaller.
  const bool complement = m > pairs / 2;
  const uint64_t draws = complement ? pairs - m : m;
  Rng rng(seed);
  std::set<std::pair<size_t, size_t>> chosen;
  while (chosen.size() < draws) {
    size_t u = rng.UniformBelow(n);
    size_t v = rng.UniformBelow(n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.emplace(u, v);
  }
  std::vector<std::pair<size_t, size_t>> edges;
  edges.reserve(m);
  if (complement) {
    for (size_t u = 0; u < n; ++u) {
      for (size_t v = u + 1; v < n; ++v) {
        if (!chosen.count({u, v})) edges.emplace_back(u, v);
      }
    }
  } else {
    edges.assign(chosen.begin(), chosen.end());
  }
  return MakeGraph(n, edges);
}

BaselineStats RandomBaseline(size_t n, size_t m, size_t samples, uint64_t seed,
                             int threads) {
  if (samples < 1) throw DomainError("baseline needs at least one sample");
  std::vector<double> ls(samples), cs(samples);
  ParallelForBlocks(samples, ResolveThreadCount(threads), [&](size_t i) {
    const Graph g = SampleGnm(n, m, DeriveSeed(seed, "sample", i));
    const Graph giant = GreatestComponent(g);
    ls[i] = giant.n() < 2 ? 0.0 : CharacteristicPathLength(giant);
    bool any = false;
    for (size_t v = 0; v < g.n() && !any; ++v) any = g.degree(v) >= 2;
    cs[i] = any ? ClusteringCoefficient(g, LowDegreePolicy::kExclude) : 0.0;
  });
  BaselineStats out;
  out.samples = samples;
  out.seed = seed;
  MeanAndSd(ls, out.l_mean, out.l_sd);
  MeanAndSd(cs, out.c_mean, out.c_sd);
  return out;
}

SmallWorldVerdict SmallWorldReport(double l, double c,
                                   const BaselineStats& baseline,
                                   SmallWorldThresholds thresholds) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  SmallWorldVerdict out;
  out.l = l;
  out.c = c;
  out.thresholds = thresholds;
  out.l_ratio = baseline.l_mean > 0 ? l / baseline.l_mean : kInf;
  if (baseline.c_mean > 0) {
    out.c_ratio = c / baseline.c_mean;
    out.is_small_world = out.l_ratio <= thresholds.l_ratio_max &&
                         out.c_ratio >= thresholds.c_ratio_min;
  } else {
    out.c_ratio = c > 0 ? kInf : 0.0;
    out.is_small_world = out.l_ratio <= thresholds.l_ratio_max && c > 0;
  }
  return out;
}

SmallWorldVerdict SmallWorldReport(const Graph& graph,
                                   const BaselineStats& baseline,
                                   SmallWorldThresholds thresholds,
                                   LowDegreePolicy policy, int threads) {
  return SmallWorldReport(CharacteristicPathLength(graph, threads),
                          ClusteringCoefficient(graph, policy), baseline,
                          thresholds);
}

MetricsReport ComputeMetrics(const Graph& graph, const MetricsConfig& config) {
  MetricsReport out;
  out.n = graph.n();
  out.m = graph.m();
  out.density = Density(graph);
  out.char_path_length = CharacteristicPathLength(graph, config.threads);
  try {
    out.clustering = ClusteringCoefficient(graph, config.policy);
  } catch (const DomainError&) {
    out.clustering.reset();
  }
  out.baseline = RandomBaseline(graph.n(), graph.m(), config.baseline_samples,
                                config.baseline_seed, config.threads);
  if (out.clustering) {
    out.small_world = SmallWorldReport(out.char_path_length, *out.clustering,
                                       out.baseline, config.thresholds);
  }
  out.degrees = ComputeDegreeDistribution(graph, config.tail);
  out.degree_table = DegreeTable(graph, config.degree_table_k);
  out.betweenness = Betweenness(graph, config.threads);
  out.betweenness_table =
      BetweennessTable(graph, out.betweenness, config.betweenness_table_k);
  out.rich_club =
      RichClubCheck(graph, std::min(config.rich_club_k, graph.n()),
                    config.rich_club_threshold);
  return out;
}

}  // namespace codexgraph
