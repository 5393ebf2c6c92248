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


#include "codexgraph/corpus.h"

#include <string>

#include "codexgraph/error.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace codexgraph {
namespace {

using ::testing::HasSubstr;

constexpr char kMinimal[] = R"({
  "schema": "codexgraph-corpus-v1",
  "root": {"id": "code", "kind": "code", "heading": "Code", "children": [
    {"id": "book:1", "kind": "book", "heading": "Book I", "children": [
      {"id": "book:1/title:1", "kind": "title", "heading": "Title I",
       "children": [
        {"id": "book:1/title:1/chapter:1", "kind": "chapter",
         "heading": "Chapter I", "children": [
          {"id": "L111-1", "kind": "article", "heading": "",
           "text": "No reference."}]}]}]}]}})";

std::string MinicodePath() {
  return std::string(CODEXGRAPH_TEST_DATA) + "/fixtures/minicode.json";
}

TEST(LoadCorpusTest, MinimalDocument) {
  Corpus corpus = LoadCorpus(kMinimal);
  EXPECT_EQ(corpus.size(), 5u);
  EXPECT_EQ(corpus.root().id, "code");
  EXPECT_EQ(corpus.Get("L111-1").text, "No reference.");
  EXPECT_EQ(*corpus.node(corpus.IndexOf("L111-1")).parent,
            corpus.IndexOf("book:1/title:1/chapter:1"));
}

TEST(LoadCorpusTest, Minicode) {
  Corpus corpus = LoadCorpusFile(MinicodePath());
  EXPECT_EQ(corpus.size(), 94u);
}

TEST(LoadCorpusTest, DuplicateIdNamesBothLocations) {
  constexpr char kDoc[] = R"({"schema": "codexgraph-corpus-v1",
    "root": {"id": "c", "kind": "code", "heading": "", "children": [
      {"id": "book:1", "kind": "book", "heading": "", "children": [
        {"id": "L211-1", "kind": "article", "heading": "", "text": ""},
        {"id": "L. 211-1", "kind": "article", "heading": "", "text": ""}]}]}})";
  try {
    LoadCorpus(kDoc);
    FAIL() << "expected DuplicateIdError";
  } catch (const DuplicateIdError& e) {
    EXPECT_THAT(e.what(), HasSubstr("children[0]"));
    EXPECT_THAT(e.what(), HasSubstr("children[1]"));
  }
}

TEST(LoadCorpusTest, SchemaErrorsNameThePath) {
  try {
    LoadCorpus(R"({"schema": "codexgraph-corpus-v1", "root": {"id": "c",
      "kind": "code", "heading": "", "children": [{"id": "book:1",
      "kind": "volume", "heading": ""}]}})");
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_THAT(e.what(), HasSubstr("$.root.children[0].kind"));
  }
  EXPECT_THROW(LoadCorpus("not json"), SchemaError);
  EXPECT_THROW(LoadCorpus(R"({"schema": "v0", "root": {}})"), SchemaError);
  EXPECT_THROW(LoadCorpus(R"({"schema": "codexgraph-corpus-v1"})"),
               SchemaError);
}

TEST(LoadCorpusTest, KindOrderViolation) {
  EXPECT_THROW(LoadCorpus(R"({"schema": "codexgraph-corpus-v1",
    "root": {"id": "c", "kind": "code", "heading": "", "children": [
      {"id": "book:1", "kind": "book", "heading": "", "children": [
        {"id": "book:1/title:1", "kind": "title", "heading": "", "children": [
          {"id": "book:2", "kind": "book", "heading": ""}]}]}]}})"),
               HierarchyError);
  EXPECT_THROW(LoadCorpus(R"({"schema": "codexgraph-corpus-v1",
    "root": {"id": "c", "kind": "code", "heading": "", "children": [
      {"id": "L1-1", "kind": "article", "heading": "", "text": "",
       "children": [{"id": "L1-2", "kind": "article", "heading": "",
                     "text": ""}]}]}})"),
               HierarchyError);
}

TEST(BuilderTest, RejectsParentOffTheRightmostPath) {
  Corpus::Builder builder("code", "Code");
  size_t b1 = builder.Add(0, "book:1", NodeKind::kBook, "I");
  builder.Add(0, "book:2", NodeKind::kBook, "II");
  EXPECT_THROW(builder.Add(b1, "L100-1", NodeKind::kArticle, ""),
               HierarchyError);
}

TEST(BuilderTest, IdKindMustMatchNodeKind) {
  Corpus::Builder builder("code", "Code");
  EXPECT_THROW(builder.Add(0, "L100-1", NodeKind::kBook, ""), Error);
}

TEST(NormalizeIdTest, Articles) {
  EXPECT_EQ(NormalizeId("L. 211-3"), "L211-3");
  EXPECT_EQ(NormalizeId("l.211-3"), "L211-3");
  EXPECT_EQ(NormalizeId("R 123-4-1"), "R123-4-1");
  EXPECT_EQ(NormalizeId("  D.5-1 "), "D5-1");
}

TEST(NormalizeIdTest, Hierarchy) {
  EXPECT_EQ(NormalizeId("Chapter III of Title III of Book I"),
            "book:1/title:3/chapter:3");
  EXPECT_EQ(NormalizeId("chapitre II du titre Ier du livre V"),
            "book:5/title:1/chapter:2");
  EXPECT_EQ(NormalizeId("Book IV"), "book:4");
  EXPECT_EQ(NormalizeId("book:1/title:3"), "book:1/title:3");
}

TEST(NormalizeIdTest, Unparseable) {
  EXPECT_THROW(NormalizeId(""), NormalizationError);
  EXPECT_THROW(NormalizeId("Article"), NormalizationError);
  EXPECT_THROW(NormalizeId("Chapter III of Title II"), NormalizationError);
  EXPECT_THROW(NormalizeId("Book I of Chapter II"), NormalizationError);
  EXPECT_THROW(NormalizeId("title:1/book:2"), NormalizationError);
}

TEST(BookOfTest, Minicode) {
  Corpus corpus = LoadCorpusFile(MinicodePath());
  EXPECT_EQ(BookOf(corpus, "L111-1"), "book:1");
  EXPECT_EQ(BookOf(corpus, "code"), std::nullopt);
  EXPECT_EQ(BookOf(corpus, "book:2"), "book:2");
  EXPECT_THROW(BookOf(corpus, "L999-9"), LookupError);
}

TEST(CensusTest, Minimal) {
  KindCounts counts = Census(LoadCorpus(kMinimal));
  EXPECT_EQ(counts[NodeKind::kCode], 1u);
  EXPECT_EQ(counts[NodeKind::kBook], 1u);
  EXPECT_EQ(counts[NodeKind::kTitle], 1u);
  EXPECT_EQ(counts[NodeKind::kChapter], 1u);
  EXPECT_EQ(counts[NodeKind::kArticle], 1u);
  EXPECT_EQ(counts.total(), 5u);
}

TEST(CensusTest, Minicode) {
  Corpus corpus = LoadCorpusFile(MinicodePath());
  KindCounts counts = Census(corpus);
  EXPECT_EQ(counts[NodeKind::kCode], 1u);
  EXPECT_EQ(counts[NodeKind::kBook], 7u);
  EXPECT_EQ(counts[NodeKind::kTitle], 9u);
  EXPECT_EQ(counts[NodeKind::kChapter], 12u);
  EXPECT_EQ(counts[NodeKind::kSection], 3u);
  EXPECT_EQ(counts[NodeKind::kSubsection], 0u);
  EXPECT_EQ(counts[NodeKind::kParagraph], 0u);
  EXPECT_EQ(counts[NodeKind::kArticle], 62u);
  EXPECT_EQ(counts.total(), corpus.size());
}

TEST(SerializeCorpusTest, RoundTrip) {
  Corpus corpus = LoadCorpusFile(MinicodePath());
  std::string once = SerializeCorpus(corpus);
  EXPECT_EQ(SerializeCorpus(LoadCorpus(once)), once);
}

TEST(KindTest, NamesRoundTrip) {
  for (int i = 0; i < kNumNodeKinds; ++i) {
    auto kind = static_cast<NodeKind>(i);
    EXPECT_EQ(ParseKind(KindName(kind)), kind);
  }
  EXPECT_EQ(ParseKind("volume"), std::nullopt);
}

}  // namespace
}  // namespace codexgraph
