#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorlab/embedding.hpp"
#include "minorlab/execution.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

// C_m x C_m on the torus, (i,j) -> i*m + j, rotation right, down, left, up.
EmbeddedGraph torus_grid_embedding(int m);

// Two C4 x C4 torus grids joined by a tube of four edges between a face of each (orientable genus 2).
EmbeddedGraph double_torus_embedding();

// Subdivides every edge once and puts a vertex in each face adjacent to its subdivided boundary.
// Original vertices keep their ids, edge i (sorted order) gets order()+i, face f gets order()+|E|+f.
EmbeddedGraph refine_all_faces(const EmbeddedGraph& e);

struct BoostedEmbedding {
  EmbeddedGraph embedding;
  std::vector<Vertex> disk;  // boundary walk of the root face
};

// Dual spanning tree rooted at root_face; leaves are processed toward the root, each subdividing
// the edge e_F it shares with its parent so that every other vertex of the face boundary gains d
// neighbours on it.
BoostedEmbedding boost_degrees(const EmbeddedGraph& e, int root_face, int d);

// sum ceil((l-3)(l-4)/6) <= (p-3)(p-4)/6 + 1, compared exactly.
bool genus_budget_ok(const std::vector<int>& clique_sizes, int p);

struct FaceWidthCertificate {
  int value = 0;           // exact value, or a lower bound when !exact
  bool exact = true;
  int base_value = 0;      // exact face-width of the base embedding
  int refinements = 0;
};

struct PackingReplay {
  bool excluded = false;   // every admissible apex distribution violates the genus budget
  long long distributions = 0;
};

struct TightConstruction {
  Graph g;                 // core plus Z
  EmbeddedGraph core;
  std::vector<Vertex> disk;
  VertexSet z;             // ids core.order() .. g.order()-1
  int n = 0, k = 0, p = 0, r = 0;
  int connectivity_target = 0;
  std::optional<bool> connectivity_holds;  // κ(g) >= connectivity_target; absent above the cap
  FaceWidthCertificate face_width;
  bool disk_is_face = false;
  PackingReplay packing;
  std::vector<std::string> conditional_claims;
};

struct TightOptions {
  int exact_cap = 400;           // radial nodes for exact face-width
  int connectivity_cap = 20000;  // vertices for checking κ(g) >= target
  Execution execution = Execution::Parallel;
};

TightConstruction build_tight_construction(const EmbeddedGraph& base, int n, int k, int p, int r,
                                           const TightOptions& opts = {});

// Every distribution of apexes over k disjoint K_p minors permitted by |Z| breaks the genus budget.
PackingReplay replay_packing_exclusion(int p, int k);

nlohmann::json tight_certificate_json(const TightConstruction& t);

}  // namespace minorlab
