#include <random>

#include <gtest/gtest.h>

#include "dfvs/graph.hpp"
#include "dfvs/oracle.hpp"

namespace dfvs {
namespace {

DiGraph path3() {
  DiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

DiGraph triangle() {
  DiGraph g = path3();
  g.add_edge(2, 0);
  return g;
}

std::vector<Edge> edges_of(const DiGraph& g) { return g.edges(); }

TEST(DiGraphTest, AddVertex) {
  DiGraph g;
  VertexId a = g.add_vertex();
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_TRUE(g.has_vertex(a));

  DiGraph two(2);
  VertexId fresh = two.add_vertex();
  EXPECT_NE(fresh, 0u);
  EXPECT_NE(fresh, 1u);

  DiGraph h;
  VertexSet ids{h.add_vertex(), h.add_vertex(), h.add_vertex()};
  EXPECT_EQ(ids.size(), 3u);
}

TEST(DiGraphTest, IdsAreNotReusedAfterDeletion) {
  DiGraph g(3);
  g.erase_vertex(2);
  EXPECT_EQ(g.add_vertex(), 3u);
  DiGraph derived = remove_vertices(g, {0});
  EXPECT_EQ(derived.add_vertex(), 4u);
}

TEST(DiGraphTest, AddEdge) {
  DiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  EXPECT_EQ(g.num_edges(), 1u);
  g.add_edge(0, 0);
  EXPECT_TRUE(g.has_edge(0, 0));
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_THROW(g.add_edge(0, 9), UnknownVertexError);
}

TEST(DiGraphTest, IndicesMirrorEdges) {
  DiGraph g = triangle();
  g.add_edge(1, 1);
  g.erase_vertex(1);
  EXPECT_EQ(g.num_edges(), 1u);
  for (VertexId v : g.vertices()) {
    for (VertexId w : g.out_neighbors(v)) {
      auto in = g.in_neighbors(w);
      EXPECT_NE(std::find(in.begin(), in.end(), v), in.end());
    }
  }
}

TEST(DerivedGraphTest, RemoveVertices) {
  DiGraph tri = triangle();
  DiGraph g = remove_vertices(tri, {1});
  EXPECT_EQ(edges_of(g), (std::vector<Edge>{{2, 0}}));
  EXPECT_EQ(tri.num_edges(), 3u);  // input untouched
  EXPECT_EQ(remove_vertices(tri, {}), tri);

  DiGraph p = remove_vertices(path3(), {0, 2});
  EXPECT_EQ(p.vertices(), (std::vector<VertexId>{1}));
  EXPECT_EQ(p.num_edges(), 0u);
  EXPECT_THROW(remove_vertices(tri, {7}), UnknownVertexError);
}

TEST(DerivedGraphTest, RemoveEdges) {
  DiGraph g = remove_edges(triangle(), {{0, 1}});
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  DiGraph bare = remove_edges(triangle(), {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(bare.num_edges(), 0u);
  EXPECT_EQ(bare.vertices(), triangle().vertices());
  EXPECT_EQ(remove_edges(triangle(), {}), triangle());
  EXPECT_EQ(remove_edges(triangle(), {{1, 0}}), triangle());
}

TEST(DerivedGraphTest, EdgeSubgraph) {
  DiGraph g = edge_subgraph(triangle(), {{0, 1}});
  EXPECT_EQ(g.vertices(), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(edges_of(g), (std::vector<Edge>{{0, 1}}));

  DiGraph with_isolated = triangle();
  with_isolated.add_vertex();
  DiGraph all = edge_subgraph(with_isolated, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(all, triangle());

  EXPECT_EQ(edge_subgraph(triangle(), {}).num_vertices(), 0u);
  EXPECT_THROW(edge_subgraph(triangle(), {{1, 0}}), GraphError);
}

TEST(DerivedGraphTest, InducedSubgraph) {
  DiGraph g = induced_subgraph(triangle(), {0, 1});
  EXPECT_EQ(edges_of(g), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(induced_subgraph(triangle(), {0, 1, 2}), triangle());
  EXPECT_EQ(induced_subgraph(triangle(), {}).num_vertices(), 0u);
  EXPECT_THROW(induced_subgraph(triangle(), {5}), UnknownVertexError);
}

TEST(AcyclicityTest, Basics) {
  EXPECT_TRUE(is_acyclic(path3()));
  EXPECT_FALSE(is_acyclic(triangle()));
  DiGraph loop(1);
  loop.add_edge(0, 0);
  EXPECT_FALSE(is_acyclic(loop));
  EXPECT_TRUE(is_acyclic(DiGraph()));
}

TEST(BypassTest, Examples) {
  EXPECT_EQ(edges_of(bypass_vertex(path3(), 1)), (std::vector<Edge>{{0, 2}}));

  // a=0, b=1, u=2, c=3
  DiGraph star(4);
  star.add_edge(0, 2);
  star.add_edge(1, 2);
  star.add_edge(2, 3);
  EXPECT_EQ(edges_of(bypass_vertex(star, 2)),
            (std::vector<Edge>{{0, 3}, {1, 3}}));

  DiGraph shortcut = path3();
  shortcut.add_edge(0, 2);
  DiGraph b = bypass_vertex(shortcut, 1);
  EXPECT_EQ(edges_of(b), (std::vector<Edge>{{0, 2}}));
  EXPECT_EQ(b.num_edges(), 1u);
}

TEST(BypassTest, Errors) {
  DiGraph g = path3();
  g.add_edge(1, 1);
  EXPECT_THROW(bypass_vertex(g, 1), SelfLoopError);
  EXPECT_THROW(bypass_vertex(g, 8), UnknownVertexError);
}

TEST(BypassTest, TwoCycleThroughUGetsNoSelfLoop) {
  DiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  DiGraph b = bypass_vertex(g, 1);
  EXPECT_EQ(b.num_edges(), 0u);
}

TEST(ReachabilityTest, Examples) {
  EXPECT_EQ(reachable_from(path3(), {0}), (VertexSet{0, 1, 2}));
  EXPECT_EQ(reachable_from(path3(), {2}), (VertexSet{2}));
  EXPECT_EQ(reachable_from(path3(), {}), VertexSet{});
  EXPECT_EQ(co_reachable_to(path3(), {2}), (VertexSet{0, 1, 2}));
  EXPECT_EQ(co_reachable_to(path3(), {0}), (VertexSet{0}));
  EXPECT_THROW(reachable_from(path3(), {3}), UnknownVertexError);
  EXPECT_THROW(co_reachable_to(path3(), {3}), UnknownVertexError);
}

// Randomized structural properties over the seeded digraph stream.
class GraphPropertyTest : public ::testing::Test {
 protected:
  std::vector<DiGraph> graphs() {
    auto gs = oracle::enumerate_small_digraphs(3, 0, 0);
    auto more = oracle::enumerate_small_digraphs(6, 17, 400);
    gs.insert(gs.end(), more.begin(), more.end());
    return gs;
  }
};

TEST_F(GraphPropertyTest, DeletionPreservesAcyclicity) {
  std::mt19937_64 rng(3);
  for (const DiGraph& g : graphs()) {
    if (!is_acyclic(g)) continue;
    VertexSet r;
    for (VertexId v : g.vertices()) {
      if (rng() & 1) r.insert(v);
    }
    EXPECT_TRUE(is_acyclic(remove_vertices(g, r)));
  }
}

TEST_F(GraphPropertyTest, BypassPreservesAcyclicityAndReachability) {
  for (const DiGraph& g : graphs()) {
    for (VertexId u : g.vertices()) {
      if (g.has_edge(u, u)) continue;
      DiGraph b = bypass_vertex(g, u);
      if (is_acyclic(g)) {
        EXPECT_TRUE(is_acyclic(b));
      }
      for (VertexId a : g.vertices()) {
        if (a == u) continue;
        VertexSet before = reachable_from(g, {a});
        VertexSet after = reachable_from(b, {a});
        before.erase(u);
        EXPECT_EQ(before, after) << "a=" << a << " u=" << u;
      }
    }
  }
}

TEST_F(GraphPropertyTest, ReverseMirrorsReachability) {
  for (const DiGraph& g : graphs()) {
    DiGraph r = reverse(g);
    for (VertexId v : g.vertices()) {
      EXPECT_EQ(reachable_from(g, {v}), co_reachable_to(r, {v}));
    }
  }
}

TEST_F(GraphPropertyTest, Identities) {
  for (const DiGraph& g : graphs()) {
    EXPECT_EQ(remove_vertices(g, {}), g);
    const std::vector<VertexId> vs = g.vertices();
    VertexSet all(vs.begin(), vs.end());
    EXPECT_EQ(induced_subgraph(g, all), g);
  }
}

}  // namespace
}  // namespace dfvs
