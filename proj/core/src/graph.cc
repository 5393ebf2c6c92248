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

#include "codexgraph/graph.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "codexgraph/error.h"

namespace codexgraph {

std::optional<size_t> Graph::Find(std::string_view id) const {
  const auto it = index_.find(NodeId(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t Graph::IndexOf(std::string_view id) const {
  if (auto v = Find(id)) return *v;
  throw LookupError("unknown vertex '" + std::string(id) + "'");
}

bool Graph::HasEdge(size_t u, size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

size_t Graph::Multiplicity(size_t u, size_t v) const {
  const auto& row = adj_[u];
  const auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return 0;
  return mult_[u][it - row.begin()];
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (size_t u = 0; u < n(); ++u) {
    for (size_t i = 0; i < adj_[u].size(); ++i) {
      if (adj_[u][i] > u) out.push_back({u, adj_[u][i], mult_[u][i]});
    }
  }
  return out;
}

Graph::Builder::Builder(std::vector<NodeId> vertices)
    : vertices_(std::move(vertices)) {}

void Graph::Builder::AddEdge(size_t u, size_t v, size_t count) {
  if (u >= vertices_.size() || v >= vertices_.size()) {
    throw ConsistencyError("edge endpoint out of range");
  }
  if (u == v) {
    throw ConsistencyError("self-loop on '" + vertices_[u] + "'");
  }
  if (u > v) std::swap(u, v);
  edges_[{u, v}] += count;
}

Graph Graph::Builder::Build() && {
  Graph g;
  g.vertices_ = std::move(vertices_);
  g.index_.reserve(g.vertices_.size());
  for (size_t i = 0; i < g.vertices_.size(); ++i) {
    if (!g.index_.emplace(g.vertices_[i], i).second) {
      throw DuplicateIdError("duplicate vertex '" + g.vertices_[i] + "'");
    }
  }
  g.adj_.resize(g.vertices_.size());
  g.mult_.resize(g.vertices_.size());
  std::vector<std::tuple<size_t, size_t, size_t>> arcs;
  arcs.reserve(2 * edges_.size());
  for (const auto& [uv, count] : edges_) {
    arcs.emplace_back(uv.first, uv.second, count);
    arcs.emplace_back(uv.second, uv.first, count);
  }
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [from, to, count] : arcs) {
    g.adj_[from].push_back(to);
    g.mult_[from].push_back(count);
  }
  g.m_ = edges_.size();
  return g;
}

Graph MakeGraph(size_t n,
                const std::vector<std::pair<size_t, size_t>>& edges) {
  std::vector<NodeId> ids(n);
  for (size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
  Graph::Builder builder(std::move(ids));
  for (const auto& [u, v] : edges) builder.AddEdge(u, v);
  return std::move(builder).Build();
}

Graph BuildGraph(const Corpus& corpus, const ExtractionReport& refs) {
  std::vector<NodeId> ids;
  ids.reserve(corpus.size() - 1);
  for (size_t i = 1; i < corpus.size(); ++i) ids.push_back(corpus.node(i).id);
  Graph::Builder builder(std::move(ids));
  auto vertex = [&](const NodeId& id) {
    const auto index = corpus.Find(id);
    if (!index || *index == 0) {
      throw ConsistencyError("citation touches unknown node '" + id + "'");
    }
    return *index - 1;
  };
  for (const CitationRef& ref : refs.resolved) {
    const size_t u = vertex(ref.source);
    const size_t v = vertex(ref.target);
    if (u == v) {
      throw ConsistencyError("self-citation on '" + ref.source +
                             "' among resolved references");
    }
    builder.AddEdge(u, v);
  }
  return std::move(builder).Build();
}

IsolatedCounts IsolatedCensus(const Graph& graph, const Corpus& corpus) {
  IsolatedCounts out;
  for (size_t v = 0; v < graph.n(); ++v) {
    if (graph.degree(v) != 0) continue;
    ++out.total;
    if (corpus.Get(graph.vertex(v)).kind == NodeKind::kArticle) {
      ++out.articles;
    } else {
      ++out.headings;
    }
  }
  return out;
}

ComponentDecomposition Components(const Graph& graph) {
  const size_t n = graph.n();
  constexpr size_t kUnseen = static_cast<size_t>(-1);
  std::vector<size_t> label(n, kUnseen);
  std::vector<std::vector<size_t>> found;
  std::vector<size_t> queue;
  for (size_t s = 0; s < n; ++s) {
    if (label[s] != kUnseen) continue;
    const size_t c = found.size();
    label[s] = c;
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (size_t w : graph.neighbors(queue[head])) {
        if (label[w] == kUnseen) {
          label[w] = c;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    found.push_back(queue);
  }
  // Discovery order already sorts by smallest member, so a stable sort on
  // size applies the tie-break.
  std::vector<size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return found[a].size() > found[b].size();
  });
  ComponentDecomposition out;
  out.component_id.resize(n);
  for (size_t rank = 0; rank < order.size(); ++rank) {
    for (size_t v : found[order[rank]]) out.component_id[v] = rank;
    out.sizes.push_back(found[order[rank]].size());
    out.members.push_back(std::move(found[order[rank]]));
  }
  return out;
}

Graph InducedSubgraphByIndex(const Graph& graph,
                             const std::vector<size_t>& keep) {
  std::vector<size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  constexpr size_t kDropped = static_cast<size_t>(-1);
  std::vector<size_t> remap(graph.n(), kDropped);
  std::vector<NodeId> ids;
  ids.reserve(sorted.size());
  for (size_t v : sorted) {
    if (v >= graph.n()) {
      throw LookupError("vertex index " + std::to_string(v) +
                        " out of range");
    }
    remap[v] = ids.size();
    ids.push_back(graph.vertex(v));
  }
  Graph::Builder builder(std::move(ids));
  for (const Edge& e : graph.Edges()) {
    if (remap[e.u] != kDropped && remap[e.v] != kDropped) {
      builder.AddEdge(remap[e.u], remap[e.v], e.multiplicity);
    }
  }
  return std::move(builder).Build();
}

Graph InducedSubgraph(const Graph& graph, const std::vector<NodeId>& keep) {
  std::vector<size_t> indices;
  indices.reserve(keep.size());
  for (const NodeId& id : keep) indices.push_back(graph.IndexOf(id));
  return InducedSubgraphByIndex(graph, indices);
}

Graph GreatestComponent(const Graph& graph) {
  if (graph.n() == 0) return graph;
  return InducedSubgraphByIndex(graph, Components(graph).members.front());
}

std::vector<DegreeRow> DegreeTable(const Graph& graph, size_t k) {
  if (k < 1) throw DomainError("degree table needs k >= 1");
  std::vector<DegreeRow> rows;
  rows.reserve(graph.n());
  for (size_t v = 0; v < graph.n(); ++v) {
    rows.push_back({graph.vertex(v), graph.degree(v)});
  }
  const size_t top = std::min(k, rows.size());
  std::partial_sort(rows.begin(), rows.begin() + top, rows.end(),
                    [](const DegreeRow& a, const DegreeRow& b) {
                      if (a.degree != b.degree) return a.degree > b.degree;
                      return a.vertex < b.vertex;
                    });
  rows.resize(top);
  return rows;
}

}  // namespace codexgraph
