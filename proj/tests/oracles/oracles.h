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

// Slow, independent reference implementations used only by the tests. They
// share no code with the library beyond the Graph container.

#ifndef CODEXGRAPH_TESTS_ORACLES_ORACLES_H_
#define CODEXGRAPH_TESTS_ORACLES_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "codexgraph/graph.h"

namespace codexgraph::oracle {

using Matrix = std::vector<std::vector<double>>;

// All-pairs hop distances by Floyd-Warshall; -1 when unreachable.
std::vector<std::vector<long>> FloydWarshall(const Graph& graph);

// Betweenness by explicit enumeration of every shortest path of every
// unordered pair.
std::vector<double> BruteForceBetweenness(const Graph& graph);

// Median of per-vertex mean distances from FloydWarshall.
double BruteForcePathLength(const Graph& graph);

// Mean neighbourhood density from the adjacency matrix; `zero_policy`
// averages degree < 2 vertices in as 0 instead of skipping them.
double BruteForceClustering(const Graph& graph, bool zero_policy);

// Dense normalized Laplacian built from the adjacency matrix.
Matrix Laplacian(const Graph& graph);

// Cyclic Jacobi rotations; eigenvalues ascending, eigenvectors as columns.
void JacobiEigen(Matrix a, std::vector<double>& values, Matrix& vectors);

// The 2-partition of a graph without isolated vertices minimizing
// cut/vol(A) + cut/vol(B); labels 0/1 with vertex 0 on side 0.
std::vector<int> MinNormalizedCut(const Graph& graph);

// Fraction of vertices labelled consistently under the best relabeling of
// `found` onto `truth` (both with labels < k, k <= 8).
double RelabeledAgreement(const std::vector<size_t>& truth,
                          const std::vector<size_t>& found, size_t k);

// Seeded graphs for property sweeps.
Graph RandomGnp(size_t n, double p, uint64_t seed);
Graph RandomTree(size_t n, uint64_t seed);
Graph Petersen();
Graph DisjointCliques(size_t count, size_t size);

}  // namespace codexgraph::oracle

#endif  // CODEXGRAPH_TESTS_ORACLES_ORACLES_H_
