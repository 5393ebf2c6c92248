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

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "codexgraph/citations.h"
#include "codexgraph/corpus.h"
#include "codexgraph/error.h"
#include "codexgraph/graph.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace codexgraph {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;

Graph Path3() { return MakeGraph(3, {{0, 1}, {1, 2}}); }

Graph Complete(size_t n) {
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t u = 0; u < n; ++u) {
    for (size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return MakeGraph(n, edges);
}

Graph Star(size_t leaves) {
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return MakeGraph(leaves + 1, edges);
}

Graph Lattice(size_t side) {
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t r = 0; r < side; ++r) {
    for (size_t c = 0; c < side; ++c) {
      size_t v = r * side + c;
      if (c + 1 < side) edges.emplace_back(v, v + 1);
      if (r + 1 < side) edges.emplace_back(v, v + side);
    }
  }
  return MakeGraph(side * side, edges);
}

Graph MinicodeGiant() {
  Corpus corpus = LoadCorpusFile(std::string(CODEXGRAPH_TEST_DATA) +
                                 "/fixtures/minicode.json");
  return GreatestComponent(BuildGraph(corpus, ExtractAll(corpus)));
}

TEST(DensityTest, Examples) {
  EXPECT_DOUBLE_EQ(Density(980, 2186), 2.0 * 2186 / (980.0 * 979.0));
  EXPECT_NEAR(Density(980, 2186), 0.0046, 5e-5);
  EXPECT_DOUBLE_EQ(Density(Complete(4)), 1.0);
  EXPECT_DOUBLE_EQ(Density(Path3()), 2.0 / 3.0);
  EXPECT_THROW(Density(1, 0), DomainError);
}

TEST(PathLengthTest, Examples) {
  EXPECT_DOUBLE_EQ(CharacteristicPathLength(Complete(2)), 1.0);
  EXPECT_DOUBLE_EQ(CharacteristicPathLength(Complete(7)), 1.0);
  EXPECT_DOUBLE_EQ(CharacteristicPathLength(Path3()), 1.5);
  EXPECT_THAT(MeanDistances(Path3()), ElementsAre(1.5, 1.0, 1.5));
  EXPECT_THROW(CharacteristicPathLength(MakeGraph(3, {{0, 1}})), DomainError);
  EXPECT_THROW(CharacteristicPathLength(MakeGraph(1, {})), DomainError);
}

TEST(ClusteringTest, Examples) {
  EXPECT_DOUBLE_EQ(ClusteringCoefficient(Complete(3)), 1.0);
  EXPECT_DOUBLE_EQ(ClusteringCoefficient(Star(4), LowDegreePolicy::kZero),
                   0.0);
  EXPECT_DOUBLE_EQ(ClusteringCoefficient(Star(4)), 0.0);
  Graph k4_minus = MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_NEAR(ClusteringCoefficient(k4_minus), 5.0 / 6.0, 1e-15);
  EXPECT_THROW(ClusteringCoefficient(Complete(2)), DomainError);
  EXPECT_DOUBLE_EQ(ClusteringCoefficient(Complete(2), LowDegreePolicy::kZero),
                   0.0);
}

TEST(DegreeDistributionTest, Star) {
  DegreeDistribution dist = ComputeDegreeDistribution(Star(4));
  ASSERT_EQ(dist.points.size(), 4u);
  EXPECT_EQ(dist.points[0].k, 1u);
  EXPECT_DOUBLE_EQ(dist.points[0].cum_prob, 1.0);
  EXPECT_DOUBLE_EQ(dist.points[1].cum_prob, 0.2);
  EXPECT_DOUBLE_EQ(dist.points[2].cum_prob, 0.2);
  EXPECT_DOUBLE_EQ(dist.points[3].cum_prob, 0.2);
  EXPECT_EQ(dist.points[3].count, 1u);
}

TEST(DegreeDistributionTest, RegularGraphIsOneStep) {
  DegreeDistribution dist = ComputeDegreeDistribution(Complete(5));
  ASSERT_EQ(dist.points.size(), 1u);
  EXPECT_EQ(dist.points[0].k, 4u);
  EXPECT_DOUBLE_EQ(dist.points[0].cum_prob, 1.0);
  EXPECT_FALSE(dist.tail_slope.has_value());
}

TEST(DegreeDistributionTest, MinicodeMatchesGolden) {
  std::ifstream in(std::string(CODEXGRAPH_TEST_DATA) +
                   "/fixtures/minicode_degdist.csv");
  std::stringstream golden;
  golden << in.rdbuf();
  DegreeDistribution dist = ComputeDegreeDistribution(MinicodeGiant());
  EXPECT_EQ(DegreeDistributionCsv(dist), golden.str());
  ASSERT_TRUE(dist.tail_slope.has_value());
  EXPECT_NEAR(*dist.tail_slope, -2.16860649514, 1e-9);
}

TEST(DegreeDistributionTest, TailWindowSlope) {
  // Points (1,1), (2,0.5), (4,0.25) in a graph with degrees 1, 2, 4.
  DegreeDistribution dist = ComputeDegreeDistribution(
      MakeGraph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 6}, {6, 7}, {5, 7}}),
      {1, 0});
  EXPECT_EQ(dist.window.k_max, 4u);
  ASSERT_TRUE(dist.tail_slope.has_value());
}

TEST(BetweennessTest, Examples) {
  EXPECT_THAT(Betweenness(Path3()), ElementsAre(0.0, 1.0, 0.0));
  EXPECT_THAT(Betweenness(Complete(4)), ElementsAre(0.0, 0.0, 0.0, 0.0));
  std::vector<BetweennessRow> top =
      BetweennessTable(Path3(), Betweenness(Path3()), 1);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].vertex, "1");
  EXPECT_DOUBLE_EQ(top[0].score, 1.0);
  EXPECT_EQ(top[0].degree, 2u);
}

TEST(BetweennessTest, DisconnectedPairsContributeNothing) {
  Graph g = MakeGraph(6, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_THAT(Betweenness(g), ElementsAre(0, 1, 0, 0, 0, 0));
}

TEST(BetweennessTest, MinicodeTopRows) {
  Graph g = MinicodeGiant();
  std::vector<BetweennessRow> top = BetweennessTable(g, Betweenness(g, 3), 3);
  ASSERT_EQ(top.size(), 3u);
  EXPECT_EQ(top[0].vertex, "L640-1");
  EXPECT_NEAR(top[0].score, 1127.666666666667, 1e-9);
  EXPECT_EQ(top[0].degree, 8u);
  EXPECT_EQ(top[1].vertex, "L622-1");
  EXPECT_NEAR(top[1].score, 973.666666666667, 1e-9);
  EXPECT_EQ(top[2].vertex, "L142-2");
  EXPECT_NEAR(top[2].score, 880.833333333333, 1e-9);
  EXPECT_EQ(top[2].degree, 7u);
}

TEST(MetricsTest, MinicodeGiantValues) {
  Graph g = MinicodeGiant();
  EXPECT_NEAR(Density(g), 0.030303030303, 1e-12);
  EXPECT_NEAR(CharacteristicPathLength(g), 5.142857142857142, 1e-12);
  EXPECT_NEAR(ClusteringCoefficient(g), 0.075816993464052, 1e-12);
  EXPECT_NEAR(ClusteringCoefficient(g, LowDegreePolicy::kZero),
              0.049572649572650, 1e-12);
}

TEST(RichClubTest, CliqueWithPendants) {
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t u = 0; u < 5; ++u) {
    for (size_t v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
    edges.emplace_back(u, 5 + u);
  }
  RichClubResult club = RichClubCheck(MakeGraph(10, edges), 5);
  EXPECT_THAT(club.members, ElementsAre("0", "1", "2", "3", "4"));
  EXPECT_EQ(club.internal_edges, 10u);
  EXPECT_DOUBLE_EQ(club.internal_density, 1.0);
  EXPECT_TRUE(club.is_rich_club);
}

TEST(RichClubTest, MinicodeHubsAreMutuallyNonAdjacent) {
  RichClubResult club =
      RichClubCheck(BuildGraph(LoadCorpusFile(std::string(CODEXGRAPH_TEST_DATA) +
                                              "/fixtures/minicode.json"),
                               ExtractAll(LoadCorpusFile(
                                   std::string(CODEXGRAPH_TEST_DATA) +
                                   "/fixtures/minicode.json"))),
                    8);
  EXPECT_EQ(club.members.size(), 8u);
  EXPECT_EQ(club.internal_edges, 0u);
  EXPECT_FALSE(club.is_rich_club);
}

TEST(RichClubTest, Domain) {
  EXPECT_THROW(RichClubCheck(Path3(), 1), DomainError);
  EXPECT_THROW(RichClubCheck(Path3(), 4), DomainError);
}

TEST(SampleGnmTest, Examples) {
  EXPECT_EQ(SampleGnm(5, 10, 7), Complete(5));
  Graph empty = SampleGnm(7, 0, 7);
  EXPECT_EQ(empty.n(), 7u);
  EXPECT_EQ(empty.m(), 0u);
  EXPECT_EQ(SampleGnm(50, 300, 11), SampleGnm(50, 300, 11));
  EXPECT_EQ(SampleGnm(50, 300, 11).m(), 300u);
  EXPECT_EQ(SampleGnm(30, 400, 11).m(), 400u);
  EXPECT_FALSE(SampleGnm(50, 300, 11) == SampleGnm(50, 300, 12));
  EXPECT_THROW(SampleGnm(4, 7, 0), DomainError);
}

TEST(RandomBaselineTest, CompleteSamples) {
  BaselineStats stats = RandomBaseline(5, 10, 4, 1);
  EXPECT_EQ(stats.samples, 4u);
  EXPECT_DOUBLE_EQ(stats.l_mean, 1.0);
  EXPECT_DOUBLE_EQ(stats.c_mean, 1.0);
  EXPECT_DOUBLE_EQ(stats.l_sd, 0.0);
  EXPECT_THROW(RandomBaseline(5, 10, 0, 1), DomainError);
}

TEST(RandomBaselineTest, SeedsAgreeWithinStandardErrors) {
  BaselineStats a = RandomBaseline(200, 600, 20, 1);
  BaselineStats b = RandomBaseline(200, 600, 20, 2);
  const double se_l = std::sqrt((a.l_sd * a.l_sd + b.l_sd * b.l_sd) / 20);
  const double se_c = std::sqrt((a.c_sd * a.c_sd + b.c_sd * b.c_sd) / 20);
  EXPECT_LE(std::abs(a.l_mean - b.l_mean), 3 * se_l);
  EXPECT_LE(std::abs(a.c_mean - b.c_mean), 3 * se_c);
}

TEST(RandomBaselineTest, IndependentOfThreadCount) {
  BaselineStats a = RandomBaseline(60, 120, 6, 9, 1);
  BaselineStats b = RandomBaseline(60, 120, 6, 9, 3);
  EXPECT_EQ(a.l_mean, b.l_mean);
  EXPECT_EQ(a.c_sd, b.c_sd);
}

TEST(SmallWorldTest, PaperValues) {
  BaselineStats baseline;
  baseline.l_mean = 4.61;
  baseline.c_mean = 0.0046;
  SmallWorldVerdict v = SmallWorldReport(6.78, 0.49, baseline);
  EXPECT_NEAR(v.l_ratio, 1.47, 5e-3);
  EXPECT_NEAR(v.c_ratio, 106.5, 0.1);
  EXPECT_TRUE(v.is_small_world);
}

TEST(SmallWorldTest, CompleteGraphAgainstItself) {
  Graph k6 = Complete(6);
  SmallWorldVerdict v = SmallWorldReport(k6, RandomBaseline(6, 15, 3, 0));
  EXPECT_DOUBLE_EQ(v.l_ratio, 1.0);
  EXPECT_DOUBLE_EQ(v.c_ratio, 1.0);
  EXPECT_FALSE(v.is_small_world);
}

TEST(SmallWorldTest, LatticeIsNotSmallWorld) {
  Graph grid = Lattice(20);
  SmallWorldVerdict v =
      SmallWorldReport(grid, RandomBaseline(grid.n(), grid.m(), 5, 3));
  EXPECT_GT(v.l_ratio, 2.0);
  EXPECT_FALSE(v.is_small_world);
}

TEST(SmallWorldTest, ZeroBaselineClustering) {
  BaselineStats baseline;
  baseline.l_mean = 2;
  SmallWorldVerdict v = SmallWorldReport(2, 0.1, baseline);
  EXPECT_EQ(v.c_ratio, std::numeric_limits<double>::infinity());
  EXPECT_TRUE(v.is_small_world);
  EXPECT_FALSE(SmallWorldReport(2, 0, baseline).is_small_world);
}

TEST(PolicyTest, Names) {
  EXPECT_EQ(ParsePolicy(PolicyName(LowDegreePolicy::kZero)),
            LowDegreePolicy::kZero);
  EXPECT_EQ(ParsePolicy("exclude"), LowDegreePolicy::kExclude);
  EXPECT_EQ(ParsePolicy("drop"), std::nullopt);
}

TEST(ComputeMetricsTest, ClampsRichClubAndKeepsFullBetweenness) {
  MetricsConfig config;
  config.baseline_samples = 2;
  MetricsReport report = ComputeMetrics(Star(4), config);
  EXPECT_EQ(report.n, 5u);
  EXPECT_EQ(report.betweenness.size(), 5u);
  EXPECT_EQ(report.rich_club.members.size(), 5u);
  EXPECT_EQ(report.degree_table.size(), 5u);
  EXPECT_EQ(report.betweenness_table.size(), 5u);
  EXPECT_DOUBLE_EQ(report.betweenness[0], 6.0);
}

}  // namespace
}  // namespace codexgraph
