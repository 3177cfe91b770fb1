#include <gtest/gtest.h>

#include <algorithm>

#include "minorlab/erdos_posa.hpp"
#include "minorlab/errors.hpp"
#include "minorlab/flow.hpp"
#include "minorlab/generators.hpp"
#include "minorlab/surface.hpp"
#include "oracles/surface_oracle.hpp"

using namespace minorlab;

namespace {

bool all_faces_have_length(const EmbeddedGraph& e, std::size_t len) {
  return std::all_of(e.faces().begin(), e.faces().end(), [&](const auto& f) { return f.size() == len; });
}

// Cube on the sphere, drawn as nested squares.
EmbeddedGraph planar_cube() {
  std::vector<Point> pos{{0, 0}, {3, 0}, {0, 3}, {3, 3}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};
  return embed_by_coordinates(cube_graph(), pos);
}

}  // namespace

TEST(SurfaceBases, TorusGrid) {
  auto e = torus_grid_embedding(3);
  EXPECT_EQ(e.order(), 9);
  EXPECT_EQ(e.graph().size(), 18u);
  EXPECT_EQ(e.faces().size(), 9u);
  EXPECT_EQ(e.euler_genus(), 2);
  EXPECT_EQ(face_width(e).value, 3);
  EXPECT_THROW(torus_grid_embedding(2), DomainError);
}

TEST(SurfaceBases, DoubleTorus) {
  auto e = double_torus_embedding();
  EXPECT_EQ(e.order(), 32);
  EXPECT_EQ(e.graph().size(), 68u);
  EXPECT_EQ(e.euler_genus(), 4);
  EXPECT_TRUE(all_faces_have_length(e, 4));
  EXPECT_TRUE(e.faces_are_cycles());
  EXPECT_GE(vertex_connectivity(e.graph()), 3);
}

TEST(Refine, TorusGridCountsAndFaceWidth) {
  auto base = torus_grid_embedding(3);
  auto e = refine_all_faces(base);
  EXPECT_EQ(e.order(), 9 + 18 + 9);
  EXPECT_EQ(e.graph().size(), 2u * 18 + 9 * 8);
  EXPECT_TRUE(all_faces_have_length(e, 3));
  EXPECT_EQ(e.euler_genus(), base.euler_genus());
  EXPECT_GE(vertex_connectivity(e.graph()), 3);
  auto fw = face_width(e);
  EXPECT_GE(fw.value, 6);
  EXPECT_EQ(fw.value, oracle::TorusFaceWidth(e).value(fw.value));
}

TEST(Refine, TwiceQuadruples) {
  auto e = refine_all_faces(refine_all_faces(torus_grid_embedding(3)));
  EXPECT_EQ(e.order() + static_cast<int>(e.faces().size()), 648);
  EXPECT_EQ(e.euler_genus(), 2);
  EXPECT_GE(face_width(e, {.cap = 1000}).value, 12);
}

TEST(Refine, DoublesOnTorusGrids) {
  for (int m : {4, 5}) {
    auto base = torus_grid_embedding(m);
    EXPECT_GE(face_width(refine_all_faces(base)).value, 2 * face_width(base).value) << m;
  }
}

TEST(Refine, CubeStaysPlanarAndThreeConnected) {
  auto e = refine_all_faces(planar_cube());
  EXPECT_EQ(e.euler_genus(), 0);
  EXPECT_EQ(e.order(), 8 + 12 + 6);
  EXPECT_TRUE(all_faces_have_length(e, 3));
  EXPECT_GE(vertex_connectivity(e.graph()), 3);
}

TEST(Refine, RejectsFacesThatAreNotCycles) {
  // A star on the sphere has one face whose walk repeats the centre.
  EmbeddedGraph star(std::vector<std::vector<Vertex>>{{1, 2, 3}, {0}, {0}, {0}});
  EXPECT_THROW(refine_all_faces(star), DomainError);
}

namespace {

void expect_boost_properties(const EmbeddedGraph& before, const BoostedEmbedding& b, int d) {
  const auto& e = b.embedding;
  EXPECT_EQ(e.euler_genus(), before.euler_genus());
  EXPECT_TRUE(e.faces_are_cycles());
  EXPECT_TRUE(is_k_connected(e.graph(), 3));
  // Original vertices keep their neighbours up to subdivision: each old edge becomes a path.
  for (const auto& [u, v] : before.graph().edges()) {
    bool direct = e.graph().has_edge(u, v);
    bool via_new = false;
    for (Vertex w : e.graph().neighbors(u))
      if (w >= before.order()) via_new = true;
    EXPECT_TRUE(direct || via_new);
  }
  VertexSet disk(b.disk);
  bool is_face = false;
  for (const auto& f : e.faces())
    if (VertexSet(f) == disk && f.size() == disk.size()) is_face = true;
  EXPECT_TRUE(is_face);
  // Large outputs are sampled: about 200 interior vertices, evenly spread over the ids.
  const int interior = e.order() - static_cast<int>(disk.size());
  const int stride = std::max(1, interior / 200);
  int seen = 0;
  for (Vertex v = 0; v < e.order(); ++v) {
    if (disk.contains(v) || seen++ % stride != 0) continue;
    EXPECT_GE(static_cast<int>(fan_paths(e.graph(), v, disk).size()), d) << v;
  }
}

}  // namespace

TEST(Boost, TorusGridDegreeFour) {
  auto base = torus_grid_embedding(4);
  auto b = boost_degrees(base, 0, 4);
  expect_boost_properties(base, b, 4);
}

TEST(Boost, RefinedTorusDegreeThree) {
  auto base = refine_all_faces(torus_grid_embedding(3));
  auto b = boost_degrees(base, 5, 3);
  expect_boost_properties(base, b, 3);
}

TEST(Boost, DoubleTorusDegreeFive) {
  auto base = double_torus_embedding();
  auto b = boost_degrees(base, 7, 5);
  expect_boost_properties(base, b, 5);
}

TEST(Boost, RejectsBadArguments) {
  auto base = torus_grid_embedding(3);
  EXPECT_THROW(boost_degrees(base, 0, 2), DomainError);
  EXPECT_THROW(boost_degrees(base, 9, 3), DomainError);
}

TEST(GenusBudget, Examples) {
  EXPECT_TRUE(genus_budget_ok({5}, 5));
  EXPECT_FALSE(genus_budget_ok({5, 5}, 5));
  EXPECT_TRUE(genus_budget_ok({6, 5}, 7));
  EXPECT_TRUE(genus_budget_ok({}, 5));
  EXPECT_THROW(genus_budget_ok({4}, 5), DomainError);
}

TEST(GenusBudget, AddingACliqueNeverHelps) {
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    int p = 5 + static_cast<int>(uniform_below(rng, 8));
    std::vector<int> l;
    int count = static_cast<int>(uniform_below(rng, 4));
    for (int i = 0; i < count; ++i) l.push_back(5 + static_cast<int>(uniform_below(rng, 8)));
    bool before = genus_budget_ok(l, p);
    l.push_back(5 + static_cast<int>(uniform_below(rng, 8)));
    if (!before) EXPECT_FALSE(genus_budget_ok(l, p));
  }
}

TEST(PackingReplay, ExcludesEveryDistribution) {
  for (int p = 5; p <= 8; ++p)
    for (int k = p; k <= p + 5; ++k) {
      auto r = replay_packing_exclusion(p, k);
      EXPECT_TRUE(r.excluded) << p << " " << k;
      EXPECT_GT(r.distributions, 0) << p << " " << k;
    }
}

TEST(TightConstruction, FiveFiveOne) {
  auto t = build_tight_construction(torus_grid_embedding(3), 1, 5, 5, 5);
  EXPECT_EQ(t.z.size(), 3u);
  EXPECT_EQ(t.connectivity_target, tight_connectivity(5, 5));
  ASSERT_TRUE(t.connectivity_holds.has_value());
  EXPECT_TRUE(*t.connectivity_holds);
  EXPECT_TRUE(t.face_width.exact);
  EXPECT_EQ(t.face_width.base_value, 3);
  EXPECT_EQ(t.face_width.refinements, 1);
  EXPECT_GE(t.face_width.value, 6);
  EXPECT_TRUE(t.disk_is_face);
  EXPECT_TRUE(t.packing.excluded);
  EXPECT_EQ(t.g.order(), t.core.order() + 3);
  for (Vertex z : t.z)
    for (Vertex v : t.disk) EXPECT_TRUE(t.g.has_edge(z, v));
  for (Vertex z : t.z) EXPECT_EQ(t.g.degree(z), static_cast<int>(t.disk.size()));
}

TEST(TightConstruction, ApexCountForLargerK) {
  EXPECT_EQ(tight_connectivity(5, 10), 13);
  auto t = build_tight_construction(torus_grid_embedding(3), 1, 10, 5, 2, {.connectivity_cap = 0});
  EXPECT_EQ(t.z.size(), 13u);
  EXPECT_TRUE(t.disk_is_face);
  EXPECT_EQ(t.face_width.refinements, 0);
}

TEST(TightConstruction, DoublingCertificateAboveCap) {
  auto t = build_tight_construction(torus_grid_embedding(3), 1, 5, 5, 5, {.exact_cap = 50, .connectivity_cap = 0});
  EXPECT_FALSE(t.face_width.exact);
  EXPECT_EQ(t.face_width.value, 6);
  EXPECT_FALSE(t.connectivity_holds.has_value());
}

TEST(TightConstruction, RejectsBadParameters) {
  auto base = torus_grid_embedding(3);
  EXPECT_THROW(build_tight_construction(base, 1, 4, 5, 5), DomainError);
  EXPECT_THROW(build_tight_construction(base, 0, 5, 5, 5), DomainError);
  EXPECT_THROW(build_tight_construction(planar_cube(), 1, 5, 5, 5), DomainError);
}

TEST(DeletionCheck, SeededDeletionsOnRefinedTorus) {
  auto e = refine_all_faces(torus_grid_embedding(3));
  Rng rng(2024);
  for (int t = 0; t < 50; ++t) {
    VertexSet x;
    int size = 1 + static_cast<int>(uniform_below(rng, 2));
    while (static_cast<int>(x.size()) < size) x.insert(static_cast<Vertex>(uniform_below(rng, e.order())));
    EXPECT_TRUE(face_width_deletion_check(e, x)) << t;
  }
}
