#include <gtest/gtest.h>

#include "minorlab/errors.hpp"
#include "minorlab/generators.hpp"
#include "minorlab/graph.hpp"
#include "oracles/brute_force.hpp"

using namespace minorlab;

TEST(Graph, RejectsLoopsAndRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 3}}), DomainError);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, ContractTriangleGivesEdge) {
  auto k2 = contract_edge(complete_graph(3), {0, 1});
  EXPECT_EQ(k2, complete_graph(2));
}

TEST(Graph, ContractC4GivesC3) {
  EXPECT_EQ(contract_edge(cycle_graph(4), {2, 3}), cycle_graph(3));
}

TEST(Graph, ContractKeepsSmallerIdAndShifts) {
  // path 0-1-2-3, contract 1-2: merged vertex 1 adjacent to 0 and (old 3 -> 2)
  auto g = contract_edge(path_graph(4), {2, 1});
  EXPECT_EQ(g, path_graph(3));
  Graph star(4, {{0, 3}, {1, 3}, {2, 3}});
  auto s = contract_edge(star, {0, 3});
  EXPECT_EQ(s, Graph(3, {{0, 1}, {0, 2}}));
}

TEST(Graph, ContractNonEdgeThrows) {
  EXPECT_THROW(contract_edge(path_graph(3), {0, 2}), DomainError);
}

TEST(Graph, PetersenSpokesContractToK5) {
  Graph g = petersen_graph();
  // contract spoke i-(i+5): after each contraction the inner vertex of the next spoke shifts down by one
  for (int i = 0; i < 5; ++i) g = contract_edge(g, {i, 5});
  EXPECT_TRUE(oracle::isomorphic(g, complete_graph(5)));
}

TEST(Graph, ContractionPropertyOnRandomGraphs) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_gnp(7, 0.5, rng);
    for (auto e : g.edges()) {
      Graph c = contract_edge(g, e);
      EXPECT_EQ(c.order(), g.order() - 1);
      for (auto [u, v] : c.edges()) EXPECT_NE(u, v);
      // merged vertex neighbourhood = union of endpoint neighbourhoods
      VertexSet expect;
      for (Vertex w : g.neighbors(e.first)) if (w != e.second) expect.insert(w > e.second ? w - 1 : w);
      for (Vertex w : g.neighbors(e.second)) if (w != e.first) expect.insert(w > e.second ? w - 1 : w);
      EXPECT_EQ(VertexSet(c.neighbors(e.first)), expect);
    }
  }
}

TEST(Graph, InducedAndComponents) {
  Graph g = disjoint_union(cycle_graph(3), path_graph(2));
  EXPECT_EQ(component_count(g), 2);
  EXPECT_FALSE(is_connected(g));
  auto sub = induced_subgraph(g, VertexSet{0, 1, 3});
  EXPECT_EQ(sub.graph.size(), 1u);
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_TRUE(induces_connected(g, VertexSet{3, 4}));
  EXPECT_FALSE(induces_connected(g, VertexSet{2, 3}));
  EXPECT_FALSE(induces_connected(g, VertexSet{}));
}

TEST(Graph, VertexSetOps) {
  VertexSet a{3, 1, 2, 2}, b{2, 5};
  EXPECT_EQ(a.members(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(set_union(a, b), (VertexSet{1, 2, 3, 5}));
  EXPECT_EQ(set_intersection(a, b), VertexSet{2});
  EXPECT_EQ(set_difference(a, b), (VertexSet{1, 3}));
  EXPECT_TRUE(intersects(a, b));
}

TEST(Generators, Counts) {
  EXPECT_EQ(petersen_graph().size(), 15u);
  EXPECT_EQ(grid_graph(3, 4).size(), 17u);
  EXPECT_EQ(torus_grid_graph(3).size(), 18u);
  EXPECT_EQ(cube_graph().size(), 12u);
  EXPECT_EQ(wheel_graph(5).size(), 10u);
}

TEST(Generators, PartialKTreeDecompositionIsValid) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    auto pk = random_partial_ktree(25, 3, 0.8, rng);
    EXPECT_EQ(pk.graph.order(), 25);
    EXPECT_LE(pk.decomposition.width(), 3);
  }
}
