#include <gtest/gtest.h>

#include "minorlab/enumeration.hpp"
#include "minorlab/generators.hpp"

using namespace minorlab;

TEST(Enumeration, ConnectedGraphCounts) {
  // Known counts of connected graphs on n unlabelled vertices.
  const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(static_cast<int>(connected_graphs(n).size()), expected[n]) << n;
}

TEST(Enumeration, CanonicalCodeIsInvariantUnderRelabelling) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(uniform_below(rng, 8));
    Graph g = random_gnp(n, 0.4, rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.push_back(make_edge(perm[u], perm[v]));
    EXPECT_EQ(canonical_code(g), canonical_code(Graph(n, e)));
  }
  EXPECT_NE(canonical_code(path_graph(4)), canonical_code(star_graph(3)));
}

TEST(Enumeration, EveryListedGraphIsConnected) {
  for (const auto& g : connected_graphs(6)) EXPECT_TRUE(is_connected(g));
}
