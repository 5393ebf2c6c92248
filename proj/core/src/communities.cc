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

#include "codexgraph/communities.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "codexgraph/error.h"
#include "codexgraph/metrics.h"
#include "codexgraph/parallel.h"
#include "codexgraph/random.h"

namespace codexgraph {
namespace {

constexpr double kResidualTolerance = 1e-8;
constexpr double kGapTolerance = 1e-12;
constexpr double kColoredFraction = 0.75;
constexpr size_t kReseedAttempts = 8;

struct KMeansRun {
  bool ok = false;
  double wcss = std::numeric_limits<double>::infinity();
  std::vector<size_t> labels;
};

size_t Nearest(const Eigen::MatrixXd& x, Eigen::Index row,
               const Eigen::MatrixXd& centers, double* dist2 = nullptr) {
  size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Eigen::Index c = 0; c < centers.rows(); ++c) {
    const double d = (x.row(row) - centers.row(c)).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = static_cast<size_t>(c);
    }
  }
  if (dist2) *dist2 = best_d;
  return best;
}

KMeansRun RunKMeans(const Eigen::MatrixXd& x, size_t k, uint64_t seed,
                    size_t max_iterations) {
  const Eigen::Index rows = x.rows();
  Rng rng(seed);
  Eigen::MatrixXd centers(k, x.cols());
  // Farthest-point seeding; ties go to the lowest row.
  Eigen::Index first = static_cast<Eigen::Index>(rng.UniformBelow(rows));
  centers.row(0) = x.row(first);
  std::vector<double> gap(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    gap[i] = (x.row(i) - centers.row(0)).squaredNorm();
  }
  for (size_t c = 1; c < k; ++c) {
    const auto far = std::max_element(gap.begin(), gap.end()) - gap.begin();
    if (gap[far] <= 0) return {};  // fewer distinct points than k
    centers.row(c) = x.row(far);
    for (Eigen::Index i = 0; i < rows; ++i) {
      gap[i] = std::min(gap[i], (x.row(i) - centers.row(c)).squaredNorm());
    }
  }

  KMeansRun run;
  run.labels.assign(rows, k);
  for (size_t iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (Eigen::Index i = 0; i < rows; ++i) {
      const size_t c = Nearest(x, i, centers);
      if (c != run.labels[i]) {
        run.labels[i] = c;
        changed = true;
      }
    }
    if (!changed) break;
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, x.cols());
    std::vector<size_t> counts(k, 0);
    for (Eigen::Index i = 0; i < rows; ++i) {
      sums.row(run.labels[i]) += x.row(i);
      ++counts[run.labels[i]];
    }
    for (size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) return {};
      centers.row(c) = sums.row(c) / static_cast<double>(counts[c]);
    }
  }
  std::vector<size_t> counts(k, 0);
  run.wcss = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    ++counts[run.labels[i]];
    run.wcss += (x.row(i) - centers.row(run.labels[i])).squaredNorm();
  }
  if (std::count(counts.begin(), counts.end(), 0)) return {};
  run.ok = true;
  return run;
}

}  // namespace

CentralRemoval RemoveCentrals(const Graph& graph,
                              const std::vector<double>& scores,
                              size_t count) {
  if (count > graph.n()) {
    throw DomainError("cannot remove " + std::to_string(count) +
                      " centrals from " + std::to_string(graph.n()) +
                      " vertices");
  }
  CentralRemoval out;
  std::vector<bool> removed(graph.n(), false);
  if (count > 0) {
    for (const BetweennessRow& row : BetweennessTable(graph, scores, count)) {
      removed[graph.IndexOf(row.vertex)] = true;
      out.centrals.push_back(row.vertex);
    }
  }
  std::vector<size_t> keep;
  for (size_t v = 0; v < graph.n(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  out.reduced = InducedSubgraphByIndex(graph, keep);
  for (size_t v = 0; v < out.reduced.n(); ++v) {
    if (out.reduced.degree(v) == 0) {
      out.isolated.push_back(out.reduced.vertex(v));
    }
  }
  return out;
}

Eigen::MatrixXd NormalizedLaplacian(const Graph& graph, bool weighted) {
  const size_t n = graph.n();
  Eigen::VectorXd inv_sqrt(n);
  for (size_t v = 0; v < n; ++v) {
    double d = 0;
    for (size_t w : graph.neighbors(v)) {
      d += weighted ? static_cast<double>(graph.Multiplicity(v, w)) : 1.0;
    }
    inv_sqrt[v] = d > 0 ? 1.0 / std::sqrt(d) : 0.0;
  }
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (size_t v = 0; v < n; ++v) {
    if (graph.degree(v) > 0) lap(v, v) = 1.0;
    for (size_t w : graph.neighbors(v)) {
      const double a =
          weighted ? static_cast<double>(graph.Multiplicity(v, w)) : 1.0;
      lap(v, w) = -a * inv_sqrt[v] * inv_sqrt[w];
    }
  }
  return lap;
}

Spectrum ComputeSpectrum(const Graph& graph, bool weighted) {
  Spectrum out;
  for (size_t v = 0; v < graph.n(); ++v) {
    (graph.degree(v) > 0 ? out.vertices : out.isolated).push_back(v);
  }
  if (out.vertices.empty()) return out;
  const Eigen::MatrixXd lap =
      NormalizedLaplacian(InducedSubgraphByIndex(graph, out.vertices),
                          weighted);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver did not converge on a " +
                         std::to_string(lap.rows()) + "x" +
                         std::to_string(lap.cols()) + " Laplacian");
  }
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  const Eigen::MatrixXd residual =
      lap * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal();
  out.max_residual = residual.colwise().norm().maxCoeff();
  if (!(out.max_residual <= kResidualTolerance)) {
    throw NumericalError("eigenpair residual " +
                         std::to_string(out.max_residual) + " exceeds 1e-8");
  }
  return out;
}

SpectralEmbedding Embed(const Spectrum& spectrum, size_t k) {
  const size_t rows = spectrum.vertices.size();
  if (k < 1 || k > rows) {
    throw DomainError("embedding dimension " + std::to_string(k) +
                      " needs as many non-isolated vertices (have " +
                      std::to_string(rows) + ")");
  }
  SpectralEmbedding out;
  out.eigenvalues.assign(spectrum.eigenvalues.data(),
                         spectrum.eigenvalues.data() +
                             spectrum.eigenvalues.size());
  out.vertices = spectrum.vertices;
  out.isolated_preassigned = spectrum.isolated;
  out.coordinates = spectrum.eigenvectors.leftCols(k);
  for (Eigen::Index i = 0; i < out.coordinates.rows(); ++i) {
    const double norm = out.coordinates.row(i).norm();
    if (norm > 0) out.coordinates.row(i) /= norm;
  }
  return out;
}

SpectralEmbedding ComputeSpectralEmbedding(const Graph& graph, size_t k,
                                           bool weighted) {
  return Embed(ComputeSpectrum(graph, weighted), k);
}

size_t ChooseK(const std::vector<double>& eigenvalues, size_t max_k) {
  if (eigenvalues.size() < 3) {
    throw DomainError("eigengap selection needs at least 3 eigenvalues");
  }
  const size_t top = std::min(max_k, eigenvalues.size() - 1);
  size_t best = 2;
  double best_gap = -std::numeric_limits<double>::infinity();
  for (size_t i = 2; i <= top; ++i) {
    const double gap = eigenvalues[i] - eigenvalues[i - 1];
    if (gap > best_gap + kGapTolerance) {
      best_gap = gap;
      best = i;
    }
  }
  return best;
}

std::vector<size_t> Cluster(const Eigen::MatrixXd& coordinates, size_t k,
                            const SpectralConfig& config, int threads) {
  if (k < 2) throw DomainError("clustering needs k >= 2");
  if (k > static_cast<size_t>(coordinates.rows())) {
    throw DomainError("clustering needs at least k points");
  }
  const size_t restarts = std::max<size_t>(config.kmeans_restarts, 1);
  std::vector<KMeansRun> runs(restarts);
  ParallelForBlocks(restarts, ResolveThreadCount(threads), [&](size_t r) {
    const uint64_t base = DeriveSeed(config.seed, "restart", r);
    for (size_t attempt = 0; attempt < kReseedAttempts && !runs[r].ok;
         ++attempt) {
      runs[r] = RunKMeans(coordinates, k, DeriveSeed(base, "attempt", attempt),
                          config.kmeans_max_iterations);
    }
  });
  const KMeansRun* best = nullptr;
  for (const KMeansRun& run : runs) {
    if (run.ok && (!best || run.wcss < best->wcss)) best = &run;
  }
  if (!best) {
    throw NumericalError("k-means could not form " + std::to_string(k) +
                         " non-empty clusters");
  }
  return best->labels;
}

Partition ReinsertCentrals(const RawAssignment& raw,
                           const std::vector<NodeId>& centrals,
                           const Graph& graph) {
  if (raw.vertices.size() != raw.labels.size()) {
    throw ConsistencyError("raw assignment has mismatched lengths");
  }
  constexpr size_t kNone = std::numeric_limits<size_t>::max();
  std::vector<bool> is_central(graph.n(), false);
  for (const NodeId& c : centrals) is_central[graph.IndexOf(c)] = true;
  std::vector<size_t> label(graph.n(), kNone);
  for (size_t i = 0; i < raw.vertices.size(); ++i) {
    const size_t v = graph.IndexOf(raw.vertices[i]);
    if (is_central[v] || label[v] != kNone) {
      throw ConsistencyError("vertex '" + raw.vertices[i] +
                             "' is assigned twice or is a central");
    }
    label[v] = raw.labels[i];
  }
  std::map<size_t, std::vector<size_t>> groups;
  for (size_t v = 0; v < graph.n(); ++v) {
    if (is_central[v]) continue;
    if (label[v] == kNone) {
      throw ConsistencyError("vertex '" + graph.vertex(v) +
                             "' has no community");
    }
    groups[label[v]].push_back(v);
  }
  std::vector<std::vector<size_t>> ordered;
  for (auto& [unused, members] : groups) ordered.push_back(std::move(members));
  std::sort(ordered.begin(), ordered.end(),
            [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a.front() < b.front();
            });

  Partition out;
  std::vector<size_t> community(graph.n(), kNone);
  for (size_t id = 0; id < ordered.size(); ++id) {
    Community c;
    c.id = id;
    for (size_t v : ordered[id]) {
      community[v] = id;
      c.members.push_back(graph.vertex(v));
    }
    out.communities.push_back(std::move(c));
  }
  for (size_t v = 0; v < graph.n(); ++v) {
    if (community[v] != kNone) out.assignment.emplace_back(graph.vertex(v),
                                                           community[v]);
  }
  for (const Edge& e : graph.Edges()) {
    if (is_central[e.u] || is_central[e.v]) continue;
    const size_t a = community[e.u], b = community[e.v];
    if (a != b) ++out.inter_edges[{std::min(a, b), std::max(a, b)}];
  }
  for (const NodeId& id : centrals) {
    CentralAnnotation note;
    note.vertex = id;
    std::map<size_t, size_t> edges;
    for (size_t w : graph.neighbors(graph.IndexOf(id))) {
      if (is_central[w]) {
        note.central_neighbors.push_back(graph.vertex(w));
      } else {
        ++edges[community[w]];
      }
    }
    for (const auto& [c, count] : edges) {
      note.communities.push_back(c);
      note.edges.emplace_back(c, count);
    }
    out.centrals.push_back(std::move(note));
  }
  return out;
}

std::vector<Community> BookProfile(const Partition& partition,
                                   const Corpus& corpus) {
  std::vector<Community> out = partition.communities;
  for (Community& c : out) {
    // Books in document order; vertices outside any book sort last.
    std::map<size_t, std::pair<std::optional<NodeId>, size_t>> counts;
    for (const NodeId& member : c.members) {
      const auto book = BookOf(corpus, member);
      const size_t key = book ? corpus.IndexOf(*book)
                              : std::numeric_limits<size_t>::max();
      auto& slot = counts[key];
      slot.first = book;
      ++slot.second;
    }
    c.book_fractions.clear();
    size_t best = 0;
    for (const auto& [key, entry] : counts) {
      const double fraction =
          static_cast<double>(entry.second) / static_cast<double>(
                                                  c.members.size());
      c.book_fractions.emplace_back(entry.first, fraction);
      if (entry.second > best) {
        best = entry.second;
        c.dominant_book = entry.first;
        c.dominant_fraction = fraction;
      }
    }
    c.colored = c.dominant_fraction > kColoredFraction;
  }
  return out;
}

CommunityResult DetectCommunities(const Graph& graph,
                                  const std::vector<double>& betweenness,
                                  const SpectralConfig& config, int threads) {
  CentralRemoval removal =
      RemoveCentrals(graph, betweenness, config.centrals_removed);
  const Spectrum spectrum = ComputeSpectrum(removal.reduced, config.weighted);

  CommunityResult out;
  out.k_auto = !config.k.has_value();
  out.max_residual = spectrum.max_residual;
  out.eigenvalues.assign(spectrum.eigenvalues.data(),
                         spectrum.eigenvalues.data() +
                             spectrum.eigenvalues.size());

  RawAssignment raw;
  raw.vertices = removal.reduced.vertices();
  raw.labels.assign(removal.reduced.n(), 0);
  size_t next_label = 0;
  if (!spectrum.vertices.empty()) {
    if (config.k) {
      if (*config.k < 2) throw DomainError("explicit k must be at least 2");
      out.k = *config.k;
    } else {
      out.k = ChooseK(out.eigenvalues, config.eigengap_max_k);
    }
    const SpectralEmbedding embedding = Embed(spectrum, out.k);
    const std::vector<size_t> labels =
        Cluster(embedding.coordinates, out.k, config, threads);
    for (size_t i = 0; i < labels.size(); ++i) {
      raw.labels[spectrum.vertices[i]] = labels[i];
    }
    next_label = out.k;
  }
  for (size_t v : spectrum.isolated) raw.labels[v] = next_label++;
  out.partition = ReinsertCentrals(raw, removal.centrals, graph);
  return out;
}

}  // namespace codexgraph
