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

#include <string>
#include <vector>

#include "codexgraph/citations.h"
#include "codexgraph/corpus.h"
#include "codexgraph/error.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace codexgraph {
namespace {

using ::testing::ElementsAre;

Corpus Minicode() {
  return LoadCorpusFile(std::string(CODEXGRAPH_TEST_DATA) +
                        "/fixtures/minicode.json");
}

Corpus ThreeArticles() {
  Corpus::Builder builder("code", "Code");
  size_t book = builder.Add(0, "book:1", NodeKind::kBook, "");
  builder.Add(book, "L1-1", NodeKind::kArticle, "");
  builder.Add(book, "L1-2", NodeKind::kArticle, "");
  builder.Add(book, "L1-3", NodeKind::kArticle, "");
  return std::move(builder).Build();
}

TEST(BuildGraphTest, ParallelCitationsCollapse) {
  Corpus corpus = ThreeArticles();
  ExtractionReport refs;
  refs.resolved = {{"L1-1", "L1-2", "", 0},
                   {"L1-2", "L1-1", "", 0},
                   {"L1-1", "L1-2", "", 9}};
  Graph g = BuildGraph(corpus, refs);
  EXPECT_EQ(g.n(), 4u);  // book plus three articles
  EXPECT_EQ(g.m(), 1u);
  EXPECT_EQ(g.Multiplicity(g.IndexOf("L1-1"), g.IndexOf("L1-2")), 3u);
  EXPECT_THAT(g.vertices(), ElementsAre("book:1", "L1-1", "L1-2", "L1-3"));
}

TEST(BuildGraphTest, UnknownOrSelfIsInconsistent) {
  Corpus corpus = ThreeArticles();
  ExtractionReport refs;
  refs.resolved = {{"L1-1", "L9-9", "", 0}};
  EXPECT_THROW(BuildGraph(corpus, refs), ConsistencyError);
  refs.resolved = {{"L1-1", "L1-1", "", 0}};
  EXPECT_THROW(BuildGraph(corpus, refs), ConsistencyError);
  refs.resolved = {{"code", "L1-1", "", 0}};
  EXPECT_THROW(BuildGraph(corpus, refs), ConsistencyError);
}

TEST(BuildGraphTest, Minicode) {
  Corpus corpus = Minicode();
  Graph g = BuildGraph(corpus, ExtractAll(corpus));
  EXPECT_EQ(g.n(), 93u);
  EXPECT_EQ(g.m(), 96u);
  EXPECT_EQ(IsolatedCensus(g, corpus), (IsolatedCounts{9, 3, 6}));
  ComponentDecomposition cc = Components(g);
  EXPECT_EQ(cc.sizes, (std::vector<size_t>{78, 4, 2, 1, 1, 1, 1, 1, 1, 1, 1,
                                            1}));
  Graph giant = GreatestComponent(g);
  EXPECT_EQ(giant.n(), 78u);
  EXPECT_EQ(giant.m(), 91u);
}

TEST(IsolatedCensusTest, NoIsolated) {
  Corpus corpus = ThreeArticles();
  ExtractionReport refs;
  refs.resolved = {{"L1-1", "L1-2", "", 0},
                   {"L1-3", "book:1", "", 0}};
  EXPECT_EQ(IsolatedCensus(BuildGraph(corpus, refs), corpus),
            (IsolatedCounts{0, 0, 0}));
  EXPECT_EQ(IsolatedCensus(BuildGraph(corpus, {}), corpus),
            (IsolatedCounts{4, 1, 3}));
}

TEST(ComponentsTest, TwoTriangles) {
  Graph g = MakeGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  ComponentDecomposition cc = Components(g);
  EXPECT_THAT(cc.sizes, ElementsAre(3, 3));
  EXPECT_THAT(cc.component_id, ElementsAre(0, 0, 0, 1, 1, 1));
  EXPECT_THAT(cc.members[1], ElementsAre(3, 4, 5));
}

TEST(ComponentsTest, Edgeless) {
  EXPECT_THAT(Components(MakeGraph(5, {})).sizes, ElementsAre(1, 1, 1, 1, 1));
  EXPECT_TRUE(Components(MakeGraph(0, {})).sizes.empty());
}

TEST(ComponentsTest, LargestFirstTiesBySmallestVertex) {
  Graph g = MakeGraph(7, {{5, 6}, {0, 1}, {2, 3}, {3, 4}});
  ComponentDecomposition cc = Components(g);
  EXPECT_THAT(cc.sizes, ElementsAre(3, 2, 2));
  EXPECT_THAT(cc.members[1], ElementsAre(0, 1));
  EXPECT_THAT(cc.members[2], ElementsAre(5, 6));
}

TEST(InducedSubgraphTest, Basics) {
  Graph triangle = MakeGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(InducedSubgraph(triangle, {"0", "1", "2"}), triangle);
  Graph empty = InducedSubgraph(triangle, {});
  EXPECT_EQ(empty.n(), 0u);
  EXPECT_EQ(empty.m(), 0u);
  Graph edge = InducedSubgraph(triangle, {"2", "0"});
  EXPECT_EQ(edge.m(), 1u);
  EXPECT_THAT(edge.vertices(), ElementsAre("0", "2"));
  EXPECT_THROW(InducedSubgraph(triangle, {"7"}), LookupError);
}

TEST(InducedSubgraphTest, InheritsMultiplicity) {
  Graph::Builder builder({"a", "b", "c"});
  builder.AddEdge(0, 1, 4);
  builder.AddEdge(1, 2);
  Graph g = std::move(builder).Build();
  Graph sub = InducedSubgraph(g, {"a", "b"});
  EXPECT_EQ(sub.Multiplicity(0, 1), 4u);
}

TEST(GraphBuilderTest, Errors) {
  Graph::Builder loops({"a", "b"});
  EXPECT_THROW(loops.AddEdge(0, 0), ConsistencyError);
  EXPECT_THROW(loops.AddEdge(0, 2), ConsistencyError);
  EXPECT_THROW(Graph::Builder({"a", "a"}).Build(), DuplicateIdError);
}

TEST(GraphTest, Accessors) {
  Graph g = MakeGraph(4, {{2, 0}, {0, 1}, {0, 3}});
  EXPECT_THAT(g.neighbors(0), ElementsAre(1, 2, 3));
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_TRUE(g.HasEdge(2, 0));
  EXPECT_FALSE(g.HasEdge(1, 2));
  EXPECT_EQ(g.Multiplicity(1, 2), 0u);
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}));
  EXPECT_EQ(g.IndexOf("3"), 3u);
  EXPECT_EQ(g.Find("x"), std::nullopt);
  EXPECT_THROW(g.IndexOf("x"), LookupError);
}

TEST(DegreeTableTest, Star) {
  Graph star = MakeGraph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  EXPECT_THAT(DegreeTable(star, 1), ElementsAre(DegreeRow{"0", 5}));
  EXPECT_EQ(DegreeTable(star, 10).size(), 6u);
  EXPECT_THROW(DegreeTable(star, 0), DomainError);
}

TEST(DegreeTableTest, Minicode) {
  Corpus corpus = Minicode();
  Graph g = BuildGraph(corpus, ExtractAll(corpus));
  EXPECT_THAT(DegreeTable(g, 3),
              ElementsAre(DegreeRow{"L640-1", 8}, DegreeRow{"L142-2", 7},
                          DegreeRow{"L111-1", 5}));
}

}  // namespace
}  // namespace codexgraph
