#include <random>

#include <gtest/gtest.h>

#include "dfvs/oracle.hpp"

namespace dfvs {
namespace {

TEST(BruteMinDfvsTest, Examples) {
  DiGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  EXPECT_EQ(oracle::brute_min_dfvs(tri, 3), CutResult::solution({0}));
  EXPECT_FALSE(oracle::brute_min_dfvs(tri, 0));
  EXPECT_EQ(oracle::brute_min_dfvs(DiGraph(3), 0), CutResult::solution({}));

  DiGraph loop(2);
  loop.add_edge(1, 1);
  EXPECT_EQ(oracle::brute_min_dfvs(loop, 2), CutResult::solution({1}));

  EXPECT_THROW(oracle::brute_min_dfvs(DiGraph(13), 1),
               oracle::InstanceTooLargeError);
  EXPECT_NO_THROW(oracle::brute_min_dfvs(DiGraph(13), 1, 13));
}

TEST(BruteOrderedMulticutTest, Examples) {
  // x1=0 x2=1 v=2 y1=3 y2=4, x2 -> v -> y1
  DiGraph g(5);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  TerminalSystem t{{0, 1}, {3, 4}};
  EXPECT_FALSE(oracle::brute_ordered_multicut(g, t, 0));
  EXPECT_EQ(oracle::brute_ordered_multicut(g, t, 1), CutResult::solution({2}));
  EXPECT_TRUE(oracle::brute_orderly_separates(g, t, {2}));
  EXPECT_FALSE(oracle::brute_orderly_separates(g, t, {}));

  // x1 -> y2 is allowed.
  DiGraph ok(4);
  ok.add_edge(0, 3);
  EXPECT_TRUE(oracle::brute_orderly_separates(ok, {{0, 1}, {2, 3}}, {}));
}

TEST(BruteMinSeparatorTest, Examples) {
  DiGraph d(4);
  d.add_edge(0, 1);
  d.add_edge(1, 3);
  d.add_edge(0, 2);
  d.add_edge(2, 3);
  SeparatorResult r = oracle::brute_min_separator(d, {0}, {3});
  EXPECT_EQ(r.size, SeparatorSize::finite(2));
  EXPECT_EQ(r.witness, (VertexSet{1, 2}));
  d.add_edge(0, 3);
  EXPECT_TRUE(oracle::brute_min_separator(d, {0}, {3}).size.is_infinite());
}

TEST(DigraphStreamTest, ExhaustiveTwoVertices) {
  oracle::DigraphStream stream(2, 0, 0);
  EXPECT_TRUE(stream.exhaustive());
  std::set<std::vector<Edge>> distinct;
  std::size_t count = 0;
  while (auto g = stream.next()) {
    ++count;
    EXPECT_EQ(g->num_vertices(), 2u);
    distinct.insert(g->edges());
  }
  EXPECT_EQ(count, 16u);
  EXPECT_EQ(distinct.size(), 16u);
  EXPECT_FALSE(stream.next());
}

TEST(DigraphStreamTest, RandomStreams) {
  auto a = oracle::enumerate_small_digraphs(6, 42, 1000);
  auto b = oracle::enumerate_small_digraphs(6, 42, 1000);
  auto c = oracle::enumerate_small_digraphs(6, 43, 1000);
  ASSERT_EQ(a.size(), 1000u);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  std::size_t edges = 0;
  for (const DiGraph& g : a) {
    EXPECT_EQ(g.num_vertices(), 6u);
    edges += g.num_edges();
  }
  // Each of the 36 pairs shows up about half the time.
  EXPECT_NEAR(static_cast<double>(edges) / 1000.0, 18.0, 1.0);
}

TEST(RandomDagTest, AcyclicAndDeterministic) {
  std::mt19937_64 rng(1);
  std::mt19937_64 again(1);
  for (int i = 0; i < 200; ++i) {
    DiGraph g = oracle::random_dag(7, 0.5, rng);
    EXPECT_TRUE(is_acyclic(g));
    EXPECT_EQ(g, oracle::random_dag(7, 0.5, again));
  }
  EXPECT_EQ(oracle::random_dag(5, 0.0, rng).num_edges(), 0u);
  EXPECT_EQ(oracle::random_dag(5, 1.0, rng).num_edges(), 10u);
}

TEST(RandomTerminalsTest, Distinct) {
  std::mt19937_64 rng(2);
  DiGraph g(6);
  for (int i = 0; i < 100; ++i) {
    TerminalSystem t = oracle::random_terminals(g, 3, rng);
    EXPECT_EQ(t.all().size(), 6u);
    EXPECT_NO_THROW(t.validate(g));
  }
}

}  // namespace
}  // namespace dfvs
