#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "minorlab/embedding.hpp"
#include "minorlab/errors.hpp"
#include "minorlab/generators.hpp"
#include "oracles/surface_oracle.hpp"

using namespace minorlab;

namespace {

// C_m x C_m on the torus: right, down, left, up around every vertex.
EmbeddedGraph torus_grid(int m) {
  std::vector<std::vector<Vertex>> rot(m * m);
  auto at = [m](int i, int j) { return ((i + m) % m) * m + (j + m) % m; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rot[at(i, j)] = {at(i, j + 1), at(i + 1, j), at(i, j - 1), at(i - 1, j)};
  return EmbeddedGraph(rot);
}

EmbeddedGraph random_rotations(const Graph& g, Rng& rng) {
  std::vector<std::vector<Vertex>> rot(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    rot[v] = g.neighbors(v);
    std::shuffle(rot[v].begin(), rot[v].end(), rng);
  }
  return EmbeddedGraph(rot);
}

}  // namespace

TEST(Embedding, PlanarK4FromCoordinates) {
  std::vector<Point> pos{{0, 0}, {4, 0}, {2, 3}, {2, 1}};
  auto e = embed_by_coordinates(complete_graph(4), pos);
  EXPECT_EQ(e.faces().size(), 4u);
  EXPECT_EQ(e.euler_genus(), 0);
  EXPECT_TRUE(e.faces_are_cycles());
  double total = 0;
  for (const auto& f : e.faces()) total += signed_area(f, pos);
  EXPECT_NEAR(total, 0.0, 1e-9);  // inner faces cancel the outer one
}

TEST(Embedding, TorusGridCounts) {
  auto e = torus_grid(3);
  EXPECT_EQ(e.order(), 9);
  EXPECT_EQ(e.graph().size(), 18u);
  EXPECT_EQ(e.faces().size(), 9u);
  EXPECT_EQ(e.euler_genus(), 2);
  EXPECT_EQ(e.euler_characteristic(), 0);
  EXPECT_TRUE(e.faces_are_cycles());
  EXPECT_EQ(e.graph(), torus_grid_graph(3));
}

TEST(Embedding, FacesPartitionDarts) {
  Rng rng(3);
  auto e = random_rotations(petersen_graph(), rng);
  std::size_t darts = 0;
  for (const auto& f : e.faces()) darts += f.size();
  EXPECT_EQ(darts, 2 * e.graph().size());
  for (Vertex u = 0; u < e.order(); ++u)
    for (Vertex v : e.rotation(u)) {
      const auto& f = e.faces()[e.face_of(u, v)];
      bool found = false;
      for (std::size_t i = 0; i < f.size(); ++i) found |= f[i] == u && f[(i + 1) % f.size()] == v;
      EXPECT_TRUE(found);
    }
}

TEST(Embedding, K5MinimumGenusIsTorus) {
  auto g = complete_graph(5);
  std::vector<std::vector<Vertex>> rot(5);
  for (Vertex v = 0; v < 5; ++v) rot[v] = g.neighbors(v);
  // Fix vertex 0's rotation; the others range over all 3! cyclic orders each.
  int best = 100, worst = 0;
  std::vector<int> idx(5, 0);
  for (int code = 0; code < 6 * 6 * 6 * 6; ++code) {
    int c = code;
    std::vector<std::vector<Vertex>> r = rot;
    for (Vertex v = 1; v < 5; ++v) {
      int k = c % 6;
      c /= 6;
      std::vector<Vertex> tail(r[v].begin() + 1, r[v].end());
      for (int s = 0; s < k; ++s) std::next_permutation(tail.begin(), tail.end());
      std::copy(tail.begin(), tail.end(), r[v].begin() + 1);
    }
    EmbeddedGraph e(r);
    best = std::min(best, e.euler_genus());
    worst = std::max(worst, e.euler_genus());
    EXPECT_EQ(e.euler_genus() % 2, 0);
  }
  EXPECT_EQ(best, 2);
  EXPECT_EQ(worst, 6);  // maximum genus of K5 is 3
}

TEST(Embedding, RejectsBadRotations) {
  using Rot = std::vector<std::vector<Vertex>>;
  EXPECT_THROW(EmbeddedGraph(Rot{{1}, {}}), DomainError);
  EXPECT_THROW(EmbeddedGraph(Rot{{1, 1}, {0}}), DomainError);
  EXPECT_THROW(EmbeddedGraph(Rot{{0}}), DomainError);
  EXPECT_THROW(EmbeddedGraph(Rot{{2}, {0}}), DomainError);
}

TEST(Embedding, RotationTextRoundTrip) {
  auto e = torus_grid(4);
  std::stringstream out;
  write_rotation_system(out, e);
  auto back = read_rotation_system(out);
  EXPECT_EQ(back.rotations(), e.rotations());
  std::istringstream bad("2\n1\n\n");
  EXPECT_THROW(read_rotation_system(bad), ParseError);
  std::istringstream missing("3\n1\n0\n");
  EXPECT_THROW(read_rotation_system(missing), ParseError);
}

TEST(Contractibility, TorusCycles) {
  auto e = torus_grid(4);
  EXPECT_EQ(cut_contractibility(e, {0, 1, 5, 4}), Contractibility::Contractible);
  EXPECT_EQ(cut_contractibility(e, {0, 1, 2, 3}), Contractibility::Noncontractible);
  EXPECT_EQ(cut_contractibility(e, {0, 4, 8, 12}), Contractibility::Noncontractible);
  // Boundary of a 2x2 block of faces.
  EXPECT_EQ(cut_contractibility(e, {0, 1, 2, 6, 10, 9, 8, 4}), Contractibility::Contractible);
  // Diagonal staircase wrapping both ways.
  EXPECT_EQ(cut_contractibility(e, {0, 1, 5, 6, 10, 11, 15, 12}), Contractibility::Noncontractible);
  EXPECT_THROW(cut_contractibility(e, {0, 1, 2}), DomainError);
}

TEST(Contractibility, PlanarCyclesAlwaysContract) {
  auto e = embed_by_coordinates(grid_graph(3, 3), [] {
    std::vector<Point> p;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) p.push_back({double(j), double(-i)});
    return p;
  }());
  EXPECT_EQ(cut_contractibility(e, {0, 1, 2, 5, 8, 7, 6, 3}), Contractibility::Contractible);
  EXPECT_EQ(cut_contractibility(e, {0, 1, 4, 3}), Contractibility::Contractible);
}

TEST(RadialGraph, Structure) {
  auto e = torus_grid(3);
  auto r = radial_graph(e);
  EXPECT_EQ(r.order(), 18);
  EXPECT_EQ(r.graph().size(), 36u);
  EXPECT_EQ(r.faces().size(), e.graph().size());  // one quadrilateral per edge
  EXPECT_EQ(r.euler_genus(), e.euler_genus());
  for (const auto& f : r.faces()) EXPECT_EQ(f.size(), 4u);
}

TEST(FaceWidth, TorusGridsMatchOracle) {
  for (int m = 3; m <= 5; ++m) {
    auto e = torus_grid(m);
    auto fw = face_width(e);
    ASSERT_FALSE(fw.unbounded);
    EXPECT_EQ(fw.value, m);
    EXPECT_EQ(fw.value, oracle::TorusFaceWidth(e).value(m + 1)) << m;
    auto r = radial_graph(e);
    EXPECT_EQ(cut_contractibility(r, fw.radial_cycle), Contractibility::Noncontractible);
  }
}

TEST(FaceWidth, PlanarIsUnbounded) {
  std::vector<Point> pos{{0, 0}, {4, 0}, {2, 3}, {2, 1}};
  EXPECT_TRUE(face_width(embed_by_coordinates(complete_graph(4), pos)).unbounded);
}

TEST(FaceWidth, CapRaisesSizeLimit) {
  EXPECT_THROW(face_width(torus_grid(8), {.cap = 100}), SizeLimitError);
}

TEST(FaceWidth, SerialMatchesParallel) {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    auto e = random_rotations(torus_grid_graph(4), rng);
    if (e.euler_genus() == 0) continue;
    FaceWidth a, b;
    try {
      a = face_width(e, {.execution = Execution::Serial});
      b = face_width(e, {.execution = Execution::Parallel});
    } catch (const DomainError&) {
      continue;  // radial graph not simple
    }
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.radial_cycle, b.radial_cycle);
  }
}

TEST(FaceWidth, RandomTorusEmbeddingsMatchOracle) {
  // Random edge deletions from toroidal grids; each kept deletion merges two faces, preserving the surface.
  Rng rng(5);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    auto rot = torus_grid(4 + t % 2).rotations();
    for (int d = 0; d < 6; ++d) {
      Vertex u = static_cast<Vertex>(uniform_below(rng, rot.size()));
      if (rot[u].size() <= 2) continue;
      Vertex v = rot[u][uniform_below(rng, rot[u].size())];
      if (rot[v].size() <= 2) continue;
      auto trial = rot;
      std::erase(trial[u], v);
      std::erase(trial[v], u);
      EmbeddedGraph e(trial);
      if (e.euler_genus() == 2 && is_connected(e.graph())) rot = trial;
    }
    EmbeddedGraph e(rot);
    FaceWidth fw;
    try {
      fw = face_width(e);
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    EXPECT_EQ(fw.value, oracle::TorusFaceWidth(e).value(fw.value + 1)) << t;
  }
  EXPECT_GT(checked, 20);
}

TEST(FaceWidth, DeletionLowersByAtMostSetSize) {
  auto e = torus_grid(4);
  EXPECT_EQ(face_width_after_deletion(e, VertexSet{0}).value, 3);
  EXPECT_EQ(face_width_after_deletion(e, VertexSet{0, 5}).value, 2);
  EXPECT_EQ(face_width_after_deletion(e, VertexSet{0, 1, 2, 3}).value, 0);
  for (auto x : {VertexSet{}, VertexSet{3}, VertexSet{0, 10}, VertexSet{1, 6, 11}})
    EXPECT_TRUE(face_width_deletion_check(e, x));
  EXPECT_THROW(face_width_after_deletion(e, VertexSet{16}), DomainError);
}
