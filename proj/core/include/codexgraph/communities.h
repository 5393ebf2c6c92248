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

// Spectral community detection after removal of the most central vertices.

#ifndef CODEXGRAPH_COMMUNITIES_H_
#define CODEXGRAPH_COMMUNITIES_H_

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codexgraph/corpus.h"
#include "codexgraph/graph.h"

namespace codexgraph {

struct SpectralConfig {
  size_t centrals_removed = 8;
  std::optional<size_t> k;  // nullopt selects k by the eigengap
  size_t eigengap_max_k = 40;
  size_t kmeans_restarts = 10;
  size_t kmeans_max_iterations = 300;
  uint64_t seed = 0;
  bool weighted = false;  // use multiplicities as adjacency weights
};

struct CentralRemoval {
  Graph reduced;
  std::vector<NodeId> centrals;  // by decreasing betweenness
  std::vector<NodeId> isolated;  // degree 0 in `reduced`
};

// Removes the top-`count` vertices by score (ties by id). Throws DomainError
// when count exceeds n.
CentralRemoval RemoveCentrals(const Graph& graph,
                              const std::vector<double>& scores, size_t count);

// I - D^-1/2 A D^-1/2, with zero rows and columns for isolated vertices.
Eigen::MatrixXd NormalizedLaplacian(const Graph& graph, bool weighted = false);

// Full eigendecomposition of the Laplacian of the non-isolated vertices.
struct Spectrum {
  std::vector<size_t> vertices;  // graph indices of the rows
  std::vector<size_t> isolated;  // graph indices left out
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column j pairs with eigenvalue j
  double max_residual = 0;       // max over pairs of |Lv - lambda v|
};

// Throws NumericalError if the solver fails or a residual exceeds 1e-8.
Spectrum ComputeSpectrum(const Graph& graph, bool weighted = false);

struct SpectralEmbedding {
  std::vector<double> eigenvalues;  // all, ascending
  std::vector<size_t> vertices;     // graph indices of the rows
  Eigen::MatrixXd coordinates;      // rows unit-normalized, k columns
  std::vector<size_t> isolated_preassigned;
};

// Rows of the k lowest eigenvectors. Throws DomainError when fewer than k
// non-isolated vertices exist.
SpectralEmbedding Embed(const Spectrum& spectrum, size_t k);
SpectralEmbedding ComputeSpectralEmbedding(const Graph& graph, size_t k,
                                           bool weighted = false);

// Largest gap lambda_{i+1} - lambda_i over 2 <= i <= max_k (1-based),
// ties (within 1e-12) to the smaller i. Throws DomainError with fewer than 3
// eigenvalues.
size_t ChooseK(const std::vector<double>& eigenvalues, size_t max_k);

// k-means on the embedding rows: farthest-point seeding from a random first
// centre, best of `kmeans_restarts` by within-cluster sum of squares.
// Returns one label in [0, k) per row. Throws NumericalError when no restart
// ends with k non-empty clusters.
std::vector<size_t> Cluster(const Eigen::MatrixXd& coordinates, size_t k,
                            const SpectralConfig& config, int threads = 1);

struct Community {
  size_t id = 0;
  std::vector<NodeId> members;  // graph order
  // Filled by BookProfile.
  std::vector<std::pair<std::optional<NodeId>, double>> book_fractions;
  std::optional<NodeId> dominant_book;
  double dominant_fraction = 0;
  bool colored = false;
};

struct CentralAnnotation {
  NodeId vertex;
  std::vector<size_t> communities;               // adjacent, ascending
  std::vector<std::pair<size_t, size_t>> edges;  // (community, edge count)
  std::vector<NodeId> central_neighbors;
};

// Labels of the non-central vertices, one per vertex of `vertices`.
struct RawAssignment {
  std::vector<NodeId> vertices;
  std::vector<size_t> labels;
};

struct Partition {
  // Community ids follow size (descending), ties by smallest member.
  std::vector<Community> communities;
  std::vector<std::pair<NodeId, size_t>> assignment;  // graph order
  std::vector<CentralAnnotation> centrals;
  std::map<std::pair<size_t, size_t>, size_t> inter_edges;  // a < b
};

// Canonical partition of `graph` from raw labels; centrals join no community
// and are annotated with the communities of their neighbours.
Partition ReinsertCentrals(const RawAssignment& raw,
                           const std::vector<NodeId>& centrals,
                           const Graph& graph);

// Communities of `partition` with their book composition filled in. A
// community is colored when its dominant book holds more than 75% of it.
std::vector<Community> BookProfile(const Partition& partition,
                                   const Corpus& corpus);

struct CommunityResult {
  Partition partition;
  std::vector<double> eigenvalues;
  size_t k = 0;
  bool k_auto = true;
  double max_residual = 0;
};

// RemoveCentrals, spectral clustering of the non-isolated rest, singletons
// for isolated vertices, ReinsertCentrals.
CommunityResult DetectCommunities(const Graph& graph,
                                  const std::vector<double>& betweenness,
                                  const SpectralConfig& config,
                                  int threads = 1);

}  // namespace codexgraph

#endif  // CODEXGRAPH_COMMUNITIES_H_
