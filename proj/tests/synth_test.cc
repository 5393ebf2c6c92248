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


#include "codexgraph/synth.h"

#include <algorithm>
#include <string>

#include "codexgraph/citations.h"
#include "codexgraph/corpus.h"
#include "codexgraph/error.h"
#include "codexgraph/graph.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace codexgraph {
namespace {

using ::testing::StartsWith;

Graph ArticleGraph(const Corpus& corpus) {
  std::vector<NodeId> articles;
  for (const CorpusNode& node : corpus.nodes()) {
    if (node.kind == NodeKind::kArticle) articles.push_back(node.id);
  }
  return InducedSubgraph(BuildGraph(corpus, ExtractAll(corpus)), articles);
}

TEST(SynthTest, ShapeAndTruth) {
  SynthParams params;
  params.books = 3;
  params.chapters_per_book = 2;
  params.articles_per_chapter = 5;
  params.seed = 4;
  SynthCorpus synth = SynthesizeCorpus(params);
  Corpus corpus = LoadCorpus(synth.document);
  KindCounts counts = Census(corpus);
  EXPECT_EQ(counts[NodeKind::kBook], 3u);
  EXPECT_EQ(counts[NodeKind::kChapter], 6u);
  EXPECT_EQ(counts[NodeKind::kArticle], 30u);
  EXPECT_EQ(corpus.Get("L302-5").kind, NodeKind::kArticle);
  EXPECT_EQ(BookOf(corpus, "L302-5"), "book:3");
  EXPECT_THAT(synth.truth_csv, StartsWith("article,block\nL101-1,book:1/chapter:1\n"));
  EXPECT_EQ(std::count(synth.truth_csv.begin(), synth.truth_csv.end(), '\n'),
            31);
}

TEST(SynthTest, EveryPlantedCitationResolves) {
  SynthParams params;
  params.p_out = 0.05;
  params.seed = 8;
  Corpus corpus = LoadCorpus(SynthesizeCorpus(params).document);
  ExtractionReport report = ExtractAll(corpus);
  EXPECT_GT(report.resolved.size(), 400u);
  EXPECT_TRUE(report.external_dropped.empty());
  EXPECT_TRUE(report.unparsed.empty());
  EXPECT_EQ(report.self_count(), 0u);
}

TEST(SynthTest, Deterministic) {
  SynthParams params;
  params.seed = 3;
  EXPECT_EQ(SynthesizeCorpus(params).document, SynthesizeCorpus(params).document);
  SynthParams other = params;
  other.seed = 4;
  EXPECT_NE(SynthesizeCorpus(params).document,
            SynthesizeCorpus(other).document);
}

TEST(SynthTest, NoCrossBookCitations) {
  SynthParams params;
  params.p_out = 0;
  params.seed = 1;
  Graph g = ArticleGraph(LoadCorpus(SynthesizeCorpus(params).document));
  EXPECT_GE(Components(g).sizes.size(), params.books);
}

TEST(SynthTest, PlantedHub) {
  SynthParams params;
  params.hub_count = 1;
  params.hub_degree = 50;
  params.seed = 2;
  Graph g = ArticleGraph(LoadCorpus(SynthesizeCorpus(params).document));
  std::vector<DegreeRow> top = DegreeTable(g, 1);
  EXPECT_EQ(top[0].vertex, "L101-1");
  EXPECT_GE(top[0].degree, 50u);
}

TEST(SynthTest, Domain) {
  SynthParams params;
  params.books = 0;
  EXPECT_THROW(SynthesizeCorpus(params), DomainError);
  params = {};
  params.p_in = 1.5;
  EXPECT_THROW(SynthesizeCorpus(params), DomainError);
  params = {};
  params.hub_count = 5;
  EXPECT_THROW(SynthesizeCorpus(params), DomainError);
}

}  // namespace
}  // namespace codexgraph
