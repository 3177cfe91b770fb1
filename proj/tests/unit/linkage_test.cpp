#include <gtest/gtest.h>

#include <set>

#include "minorlab/enumeration.hpp"
#include "minorlab/errors.hpp"
#include "minorlab/flow.hpp"
#include "minorlab/generators.hpp"
#include "minorlab/linkage.hpp"
#include "minorlab/treedec.hpp"
#include "oracles/linkage_oracle.hpp"

using namespace minorlab;

namespace {

Linkage single(const Path& p) { return Linkage{{p}, VertexSet{p.front()}, VertexSet{p.back()}}; }

Linkage from_paths(std::vector<Path> paths) {
  Linkage l;
  for (const auto& p : paths) {
    l.x.insert(p.front());
    l.y.insert(p.back());
  }
  l.paths = std::move(paths);
  return l;
}

VertexSet random_subset(int n, int size, Rng& rng) {
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  return VertexSet(all);
}

}  // namespace

TEST(Linkage, Validation) {
  auto g = path_graph(4);
  EXPECT_FALSE(validate_linkage(g, single({0, 1, 2, 3})).has_value());
  EXPECT_TRUE(validate_linkage(g, single({0, 2})).has_value());
  Linkage revisit{{{0, 1, 2}}, VertexSet{0, 1}, VertexSet{2}};
  EXPECT_TRUE(validate_linkage(g, revisit).has_value());
  Linkage overlap{{{0, 1}, {1, 2}}, VertexSet{0, 1}, VertexSet{1, 2}};
  EXPECT_TRUE(validate_linkage(g, overlap).has_value());
  Linkage trivial{{{1}}, VertexSet{1}, VertexSet{1}};
  EXPECT_FALSE(validate_linkage(g, trivial).has_value());
}

TEST(Linkage, EnumerationMatchesEdgeSubsetCount) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + trial % 3;
    auto g = random_gnp(n, 0.45, rng);
    if (g.size() > 14) continue;
    const int k = 1 + static_cast<int>(uniform_below(rng, 2));
    auto x = random_subset(n, k, rng), y = random_subset(n, k, rng);
    auto all = enumerate_linkages(g, x, y);
    EXPECT_EQ(static_cast<int>(all.size()), oracle::count_linkages(g, x, y)) << trial;
    std::set<std::vector<Edge>> distinct;
    for (const auto& l : all) {
      EXPECT_FALSE(validate_linkage(g, l).has_value());
      distinct.insert(l.edges());
    }
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(Singular, Examples) {
  EXPECT_TRUE(is_singular(path_graph(5), single({0, 1, 2, 3, 4})));
  // C6 from 0 to 3: an arc misses the other arc's interior.
  EXPECT_FALSE(is_singular(cycle_graph(6), single({0, 1, 2, 3})));
  // 2x3 grid: ids 0 1 2 / 3 4 5; corner to corner.
  auto grid = grid_graph(2, 3);
  auto ham = single({0, 3, 4, 1, 2, 5});
  EXPECT_EQ(is_singular(grid, ham), oracle::count_linkages(grid, VertexSet{0}, VertexSet{5}) == 1);
  EXPECT_FALSE(is_singular(grid, ham));
  // Same grid from 0 to 2: the only Hamiltonian route.
  auto snake = single({0, 3, 4, 1, 2});
  EXPECT_FALSE(is_singular(grid, snake));  // misses 5
  EXPECT_THROW(is_singular(complete_graph(11), single({0, 1})), SizeLimitError);
}

TEST(Singular, PathwidthCheckExamples) {
  EXPECT_TRUE(check_singular_pathwidth(path_graph(5), single({0, 1, 2, 3, 4})));
  auto two = disjoint_union(path_graph(3), path_graph(4));
  EXPECT_TRUE(check_singular_pathwidth(two, from_paths({{0, 1, 2}, {3, 4, 5, 6}})));
  EXPECT_THROW(check_singular_pathwidth(cycle_graph(6), single({0, 1, 2, 3})), DomainError);
}

TEST(Singular, EnumerationMatchesBruteForceCount) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : connected_graphs(n))
      EXPECT_EQ(static_cast<int>(singular_linkages(g).size()), oracle::count_singular(g)) << canonical_code(g);
  Rng rng(2);
  for (int trial = 0; trial < 6; ++trial) {
    auto g = random_gnp(5, 0.5, rng);
    if (g.size() > 8) continue;
    EXPECT_EQ(static_cast<int>(singular_linkages(g).size()), oracle::count_singular(g));
  }
}

TEST(Singular, PathwidthBoundOnSmallConnectedGraphs) {
  int instances = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : connected_graphs(n))
      for (const auto& s : singular_linkages(g)) {
        ++instances;
        EXPECT_LE(s.pathwidth, s.linkage.order()) << canonical_code(g);
        EXPECT_EQ(s.pathwidth, exact_pathwidth(g).width);
      }
  EXPECT_GT(instances, 0);
}

TEST(Comb, TrivialWhenHMeetsEveryPath) {
  auto g = grid_graph(3, 3);
  auto l = from_paths({{0, 1, 2}, {6, 7, 8}});
  auto c = extract_comb(g, l, VertexSet{0, 6}, 2);
  EXPECT_FALSE(validate_comb(g, l, c).has_value());
  for (const auto& q : c.paths) EXPECT_EQ(q.size(), 1u);
}

TEST(Comb, LadderRungMidpoint) {
  // L(4) with rung u2-v2 subdivided by vertex 8; h = {8}.
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {0, 4}, {1, 8}, {8, 5}, {2, 6}, {3, 7}};
  Graph g(9, e);
  auto l = from_paths({{0, 1, 2, 3}, {4, 5, 6, 7}});
  auto c = extract_comb(g, l, VertexSet{8}, 1);
  EXPECT_FALSE(validate_comb(g, l, c).has_value());
  EXPECT_GE(c.paths.size(), 1u);
}

TEST(Comb, GridWithThreePaths) {
  auto g = grid_graph(4, 4);
  auto l = from_paths({{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}});
  VertexSet h{13, 14, 15};
  const VertexSet z = set_union(l.x, l.y);
  ASSERT_GE(disjoint_paths(g, h, z).size(), 3u);
  auto c = extract_comb(g, l, h, 3);
  EXPECT_GE(c.paths.size(), 3u);
  EXPECT_FALSE(validate_comb(g, l, c).has_value());
  EXPECT_THROW(extract_comb(g, l, h, 5), DomainError);
}

TEST(Comb, ValidatorRejects) {
  auto g = path_graph(5);
  auto l = single({0, 1, 2});
  Comb back_into_h{VertexSet{3, 4}, {{3, 4}}};
  EXPECT_TRUE(validate_comb(g, l, back_into_h).has_value());
  Comb off{VertexSet{4}, {{4, 3}}};
  EXPECT_TRUE(validate_comb(g, l, off).has_value());
  Comb ok{VertexSet{4}, {{4, 3, 2}}};
  EXPECT_FALSE(validate_comb(g, l, ok).has_value());
}

TEST(Comb, SegmentKinds) {
  std::vector<char> marked(6, 0);
  Path p{0, 1, 2, 3};
  EXPECT_EQ(segment_of(p, marked).kind, SegmentKind::Empty);
  marked[2] = 1;
  EXPECT_EQ(segment_of(p, marked).kind, SegmentKind::Trivial);
  marked[0] = 1;
  auto s = segment_of(p, marked);
  EXPECT_EQ(s.kind, SegmentKind::Proper);
  EXPECT_EQ(s.first, 0u);
  EXPECT_EQ(s.last, 2u);
}

TEST(Comb, RandomInstancesSatisfyGuaranteeAndSubcombs) {
  Rng rng(23);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 10 + static_cast<int>(uniform_below(rng, 6));
    auto g = random_gnp(n, 0.3, rng);
    auto x = random_subset(n, 3, rng), y = random_subset(n, 3, rng);
    auto found = disjoint_paths(g, x, y);
    if (found.empty()) continue;
    auto l = from_paths(found);
    auto h = random_subset(n, 2 + static_cast<int>(uniform_below(rng, 3)), rng);
    const int t = static_cast<int>(disjoint_paths(g, h, set_union(l.x, l.y)).size());
    auto c = extract_comb(g, l, h, t);
    ++checked;
    EXPECT_GE(static_cast<int>(c.paths.size()), t);
    EXPECT_FALSE(validate_comb(g, l, c).has_value()) << *validate_comb(g, l, c);
    for (unsigned mask = 0; mask < (1u << l.paths.size()); ++mask) {
      std::vector<Path> part;
      for (std::size_t i = 0; i < l.paths.size(); ++i)
        if (mask >> i & 1) part.push_back(l.paths[i]);
      auto sub = from_paths(part);
      auto sc = subcomb(g, l, c, sub);
      EXPECT_FALSE(validate_comb(g, sub, sc).has_value()) << trial << " mask " << mask;
      if (mask == (1u << l.paths.size()) - 1) EXPECT_EQ(sc.paths, c.paths);
      if (mask == 0) EXPECT_TRUE(sc.paths.empty());
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Comb, SubcombRejectsForeignPath) {
  auto g = path_graph(5);
  auto l = single({0, 1, 2});
  Comb c{VertexSet{4}, {{4, 3, 2}}};
  EXPECT_THROW(subcomb(g, l, c, single({0, 1})), DomainError);
}

TEST(Orthogonal, WheelSpokes) {
  // Hub 0 is not on the rim 1..6; spokes 0-i.
  std::vector<Cycle> rim{{1, 2, 3, 4, 5, 6}};
  EXPECT_TRUE(is_orthogonal(single({0, 3}), rim));
  EXPECT_TRUE(is_orthogonal(single({0, 3, 4}), rim));
  EXPECT_FALSE(is_orthogonal(single({0, 3, 0 + 7, 5}), rim));  // leaves and returns
  EXPECT_FALSE(is_orthogonal(single({0, 7}), rim));             // misses the rim
}

TEST(Orthogonal, OrderMatters) {
  std::vector<Cycle> cycles{{0, 1, 2}, {3, 4, 5}};
  EXPECT_TRUE(is_orthogonal(single({0, 3}), cycles));
  EXPECT_TRUE(is_orthogonal(single({3, 0}), cycles));
  EXPECT_FALSE(is_orthogonal(single({0, 3, 1}), cycles));  // C1, C2, C1
}

TEST(Orthogonal, CylinderSpiralsAreOrthogonal) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = cylinder_instance(5, 2, seed);
    EXPECT_TRUE(is_orthogonal(inst.linkage, inst.cycles));
    auto g = inst.plane;
    EXPECT_FALSE(validate_linkage(g, inst.linkage).has_value());
  }
}

TEST(Orthogonalize, AlreadyOrthogonalIsUnchanged) {
  auto inst = cylinder_instance(5, 3, 4);
  auto out = orthogonalize(inst.plane, inst.extra, inst.cycles, inst.linkage, 2);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->method, "unchanged");
  EXPECT_EQ(out->linkage.paths, inst.linkage.paths);
  ASSERT_EQ(out->cycles.size(), 2u);
  EXPECT_EQ(out->cycles.back(), inst.cycles.back());
}

TEST(Orthogonalize, LocalPeakIsRemoved) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = cylinder_instance(4, 2, seed, true);
    EXPECT_FALSE(is_orthogonal(inst.linkage, inst.cycles));
    auto out = orthogonalize(inst.plane, inst.extra, inst.cycles, inst.linkage, 2);
    ASSERT_TRUE(out.has_value()) << seed;
    EXPECT_TRUE(is_orthogonal(out->linkage, out->cycles));
    EXPECT_EQ(out->linkage.y, inst.linkage.y);
    EXPECT_EQ(out->linkage.order(), 2);
  }
}

TEST(Orthogonalize, RandomCylindersAlwaysSucceed) {
  int nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int t = 1 + static_cast<int>(seed % 3);
    auto inst = cylinder_instance(2 + t, t, seed, seed % 2 == 1 && 2 + t >= 3);
    auto out = orthogonalize(inst.plane, inst.extra, inst.cycles, inst.linkage, 2);
    ASSERT_TRUE(out.has_value()) << seed;
    EXPECT_TRUE(is_orthogonal(out->linkage, out->cycles));
    EXPECT_EQ(out->linkage.y, inst.linkage.y);
    EXPECT_EQ(out->linkage.order(), t);
    for (Vertex v : out->x)
      EXPECT_NE(std::find(out->cycles.back().begin(), out->cycles.back().end(), v), out->cycles.back().end());
    nontrivial += out->method != "unchanged";
  }
  EXPECT_GT(nontrivial, 0);
}

TEST(Orthogonalize, RejectsBrokenHypotheses) {
  auto inst = cylinder_instance(4, 2, 1);
  EXPECT_THROW(orthogonalize(inst.plane, inst.extra, inst.cycles, inst.linkage, 3), DomainError);
  auto swapped = inst.cycles;
  std::swap(swapped.front(), swapped.back());
  EXPECT_THROW(orthogonalize(inst.plane, inst.extra, swapped, inst.linkage, 2), DomainError);
}

TEST(LinkageJson, RoundTrip) {
  auto l = from_paths({{0, 1, 2}, {5}});
  EXPECT_EQ(linkage_from_json(linkage_json(l)), l);
  Comb c{VertexSet{4}, {{4, 3}}};
  auto back = comb_from_json(comb_json(c));
  EXPECT_EQ(back.h, c.h);
  EXPECT_EQ(back.paths, c.paths);
  EXPECT_THROW(linkage_from_json(nlohmann::json{{"paths", 3}}), ParseError);
}

TEST(Orthogonalize, ReroutesWhenNoWindowFits) {
  // Full 4x8 cylinder grid; ring r position j is (r-1)*8 + j, C_1 outermost. Handle 32-33 outside C_1.
  const int len = 8;
  auto id = [&](int r, int j) { return (r - 1) * len + (j % len); };
  std::vector<Edge> e;
  std::vector<Cycle> cycles;
  for (int r = 1; r <= 4; ++r) {
    Cycle c;
    for (int j = 0; j < len; ++j) {
      c.push_back(id(r, j));
      e.push_back({id(r, j), id(r, j + 1)});
      if (r > 1) e.push_back({id(r, j), id(r - 1, j)});
    }
    cycles.push_back(c);
  }
  Graph plane(34, e);
  Graph extra(34, {{id(1, 5), 32}, {32, 33}, {33, id(1, 7)}});
  // Revisits C_3 after C_2, C_2 after C_1, and C_1 after the handle.
  Path p{id(4, 0), id(3, 0), id(2, 0), id(2, 1), id(3, 1), id(3, 2), id(2, 2), id(1, 2), id(1, 3),
         id(2, 3), id(2, 4), id(1, 4), id(1, 5), 32, 33, id(1, 7)};
  auto l = single(p);
  auto out = orthogonalize(plane, extra, cycles, l, 2);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->method, "flow");
  EXPECT_TRUE(is_orthogonal(out->linkage, out->cycles));
  EXPECT_EQ(out->linkage.y, l.y);
}

TEST(Orthogonalize, SearchesWhenComponentsAreAmbiguous) {
  // Rings of length 4 (ring r position j is (r-1)*4 + j); vertex 12 joins C_3 straight to C_1,
  // so C_1 and 12 form one component touching both chosen cycles C_2 and C_3.
  auto id = [](int r, int j) { return (r - 1) * 4 + j % 4; };
  std::vector<Edge> e;
  std::vector<Cycle> cycles;
  for (int r = 1; r <= 3; ++r) {
    Cycle c;
    for (int j = 0; j < 4; ++j) {
      c.push_back(id(r, j));
      e.push_back({id(r, j), id(r, j + 1)});
    }
    cycles.push_back(c);
  }
  e.push_back({id(1, 0), id(2, 0)});
  e.push_back({id(2, 1), id(3, 1)});
  e.push_back({id(3, 0), 12});
  e.push_back({12, id(1, 1)});
  Graph plane(13, e), extra(13);
  auto l = single({id(3, 0), 12, id(1, 1), id(1, 0)});
  auto out = orthogonalize(plane, extra, cycles, l, 2);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->method, "search");
  EXPECT_EQ(out->linkage.paths, std::vector<Path>{Path({id(3, 1), id(2, 1), id(2, 0), id(1, 0)})});
}
