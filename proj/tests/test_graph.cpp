#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "taugraph/families.hpp"
#include "taugraph/graph.hpp"

using namespace taugraph;

namespace {

Graph path(int n) { return construct({FamilyId::path, n, 0}); }
Graph cycle(int n) { return construct({FamilyId::cycle, n, 0}); }

}  // namespace

TEST(Graph, FromEdgesNormalisesAndDeduplicates) {
  const auto g = Graph::from_edges(4, {{1, 0}, {0, 1}, {2, 3}});
  EXPECT_EQ(g.order(), 4U);
  EXPECT_EQ(g.size(), 2U);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(Graph, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(65), GraphError);
}

TEST(Graph, EditsReturnCopies) {
  const auto p = path(4);
  const auto c = p.with_edge(0, 3);
  EXPECT_EQ(p.size(), 3U);
  EXPECT_EQ(c.size(), 4U);
  EXPECT_THROW(p.with_edge(0, 1), GraphError);
  EXPECT_THROW(p.without_edge(0, 2), GraphError);
  const auto shorter = p.without_vertex(0);
  EXPECT_EQ(shorter.order(), 3U);
  EXPECT_EQ(shorter.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, RelabelPreservesStructure) {
  const auto p = path(4);
  const std::vector<Vertex> perm{3, 1, 0, 2};
  const auto q = p.relabeled(perm);
  EXPECT_TRUE(q.adjacent(3, 1));
  EXPECT_TRUE(q.adjacent(1, 0));
  EXPECT_TRUE(q.adjacent(0, 2));
  EXPECT_EQ(q.size(), 3U);
}

TEST(Distances, CycleSixMultiset) {
  auto d = bfs_distances(cycle(6), 0);
  std::vector<unsigned> values;
  for (auto x : d) values.push_back(*x);
  std::sort(values.begin(), values.end());
  EXPECT_EQ(values, (std::vector<unsigned>{0, 1, 1, 2, 2, 3}));
}

TEST(Distances, UnreachableIsDistinct) {
  const auto g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const auto d = bfs_distances(g, 0);
  EXPECT_EQ(d[1], 1U);
  EXPECT_FALSE(d[2].has_value());
  EXPECT_FALSE(is_connected(g));
  EXPECT_FALSE(eccentricity(g, 0).has_value());
  EXPECT_THROW(ecc_profile(g), DisconnectedGraph);
}

TEST(Eccentricity, PathFive) {
  const auto p = ecc_profile(path(5));
  EXPECT_EQ(p.ecc, (std::vector<unsigned>{4, 3, 2, 3, 4}));
  EXPECT_EQ(p.rad, 2U);
  EXPECT_EQ(p.diam, 4U);
  EXPECT_EQ(p.center, (std::vector<Vertex>{2}));
  EXPECT_EQ(p.peripheral, (std::vector<Vertex>{0, 4}));
}

TEST(Eccentricity, BicentralPath) {
  const auto p = ecc_profile(path(6));
  EXPECT_EQ(p.center, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(p.rad, 3U);
  EXPECT_EQ(p.diam, 5U);
}

TEST(Eccentricity, EccentricSet) {
  EXPECT_EQ(eccentric_set(path(5), 1), (std::vector<Vertex>{4}));
  EXPECT_EQ(eccentric_set(cycle(6), 0), (std::vector<Vertex>{3}));
  EXPECT_EQ(eccentric_set(construct({FamilyId::star, 4, 0}), 0), (std::vector<Vertex>{1, 2, 3}));
}

TEST(DiametricalPath, CycleSix) {
  const auto p = diametrical_path(cycle(6));
  EXPECT_EQ(p.vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(p.length(), 3U);
}

TEST(DiametricalPath, SpansTheDiameter) {
  const auto g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {5, 6}});
  const auto p = diametrical_path(g);
  EXPECT_EQ(p.length(), ecc_profile(g).diam);
  EXPECT_EQ(p.front(), 3U);
  EXPECT_EQ(p.vertices, (std::vector<Vertex>{3, 2, 1, 4, 5, 6}));
  const auto d = distance_matrix(g);
  EXPECT_EQ(d[p.front()][p.back()], p.length());
}

TEST(ShortestPaths, AllOfThemInAFourCycle) {
  const auto paths = shortest_paths(cycle(4), 0, 2);
  ASSERT_EQ(paths.size(), 2U);
  EXPECT_EQ(paths[0].vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(paths[1].vertices, (std::vector<Vertex>{0, 3, 2}));
}

TEST(Cycles, CountsPerClass) {
  EXPECT_TRUE(simple_cycles(path(6)).empty());
  EXPECT_EQ(simple_cycles(cycle(5)).size(), 1U);
  EXPECT_EQ(simple_cycles(cycle(4).with_edge(0, 2)).size(), 3U);
  EXPECT_EQ(simple_cycles(construct({FamilyId::B2, 7, 0})).size(), 2U);
  EXPECT_EQ(simple_cycles(construct({FamilyId::complete, 4, 0})).size(), 7U);
}

TEST(Classify, Labels) {
  EXPECT_EQ(classify(path(5)), GraphClass::tree);
  EXPECT_EQ(classify(cycle(5)), GraphClass::unicyclic);
  EXPECT_EQ(classify(cycle(4).with_edge(0, 2)), GraphClass::bicyclic);
  EXPECT_EQ(classify(construct({FamilyId::complete, 5, 0})), GraphClass::other);
  EXPECT_EQ(classify(Graph::from_edges(4, {{0, 1}, {2, 3}})), GraphClass::other);
  EXPECT_EQ(to_string(GraphClass::bicyclic), "bicyclic");
}

TEST(Pendants, Star) {
  EXPECT_EQ(pendant_vertices(construct({FamilyId::star, 5, 0})), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_TRUE(pendant_vertices(cycle(5)).empty());
}

TEST(Describe, CompactForm) { EXPECT_EQ(describe(path(3)), "3:0-1,1-2"); }
