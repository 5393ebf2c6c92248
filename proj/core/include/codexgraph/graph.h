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

// The undirected citation network.

#ifndef CODEXGRAPH_GRAPH_H_
#define CODEXGRAPH_GRAPH_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "codexgraph/citations.h"
#include "codexgraph/corpus.h"

namespace codexgraph {

struct Edge {
  size_t u = 0;  // u < v
  size_t v = 0;
  size_t multiplicity = 1;

  bool operator==(const Edge&) const = default;
};

// Simple undirected graph over named vertices. Adjacency lists are sorted;
// parallel citations are folded into a per-edge multiplicity.
class Graph {
 public:
  class Builder;

  Graph() = default;

  size_t n() const { return vertices_.size(); }
  size_t m() const { return m_; }

  const std::vector<NodeId>& vertices() const { return vertices_; }
  const NodeId& vertex(size_t v) const { return vertices_.at(v); }
  std::optional<size_t> Find(std::string_view id) const;
  // Throws LookupError for an unknown id.
  size_t IndexOf(std::string_view id) const;

  const std::vector<size_t>& neighbors(size_t v) const { return adj_[v]; }
  size_t degree(size_t v) const { return adj_[v].size(); }
  bool HasEdge(size_t u, size_t v) const;
  // 0 when u and v are not adjacent.
  size_t Multiplicity(size_t u, size_t v) const;

  // All edges with u < v, sorted.
  std::vector<Edge> Edges() const;

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && adj_ == other.adj_ &&
           mult_ == other.mult_;
  }

 private:
  std::vector<NodeId> vertices_;
  std::unordered_map<NodeId, size_t> index_;
  std::vector<std::vector<size_t>> adj_;
  std::vector<std::vector<size_t>> mult_;  // parallel to adj_
  size_t m_ = 0;
};

class Graph::Builder {
 public:
  // Throws DuplicateIdError on repeated ids.
  explicit Builder(std::vector<NodeId> vertices);

  // Adds `count` citations between u and v. Throws ConsistencyError for a
  // loop or an out-of-range index.
  void AddEdge(size_t u, size_t v, size_t count = 1);

  Graph Build() &&;

 private:
  std::vector<NodeId> vertices_;
  std::map<std::pair<size_t, size_t>, size_t> edges_;
};

// Graph on vertices named "0".."n-1".
Graph MakeGraph(size_t n, const std::vector<std::pair<size_t, size_t>>& edges);

// Every corpus node except the root becomes a vertex, in document order;
// resolved citations become edges. Throws ConsistencyError for a citation
// touching an unknown id or a self-citation.
Graph BuildGraph(const Corpus& corpus, const ExtractionReport& refs);

struct IsolatedCounts {
  size_t total = 0;
  size_t headings = 0;
  size_t articles = 0;

  bool operator==(const IsolatedCounts&) const = default;
};

// Degree-0 vertices, split by whether the corpus node is an article.
IsolatedCounts IsolatedCensus(const Graph& graph, const Corpus& corpus);

struct ComponentDecomposition {
  std::vector<size_t> component_id;  // per vertex; 0 is the largest
  std::vector<size_t> sizes;         // non-increasing
  std::vector<std::vector<size_t>> members;  // sorted vertex indices
  size_t greatest = 0;
};

// Components ordered by size, ties by smallest vertex index.
ComponentDecomposition Components(const Graph& graph);

// Subgraph induced by `keep`, keeping the original vertex order. Throws
// LookupError for an unknown id.
Graph InducedSubgraph(const Graph& graph, const std::vector<NodeId>& keep);
Graph InducedSubgraphByIndex(const Graph& graph,
                             const std::vector<size_t>& keep);

// The largest component (ties: smallest vertex index). Empty for an empty
// graph.
Graph GreatestComponent(const Graph& graph);

struct DegreeRow {
  NodeId vertex;
  size_t degree = 0;

  bool operator==(const DegreeRow&) const = default;
};

// Top-k by degree, ties by id. Throws DomainError for k < 1.
std::vector<DegreeRow> DegreeTable(const Graph& graph, size_t k);

}  // namespace codexgraph

#endif  // CODEXGRAPH_GRAPH_H_
