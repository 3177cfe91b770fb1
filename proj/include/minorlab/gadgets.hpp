#pragma once

#include <map>
#include <string>
#include <vector>

#include "minorlab/embedding.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/minor.hpp"

namespace minorlab {

// Top path u_1..u_l (ids 0..l-1), bottom path v_1..v_l (ids l..2l-1), rungs u_i v_i.
struct Ladder {
  int length = 0;
  Graph graph;
  std::vector<Vertex> top, bottom;
};

// Ladder plus hubs w_1..w_n (ids 2l..2l+n-1), each joined to the whole bottom path.
struct Fan {
  Ladder ladder;
  int hubs_count = 0;
  Graph graph;
  std::vector<Vertex> hubs;
};

// r horizontal paths; v^i_j is id (i-1)r + (j-1) drawn at (j, -i). Vertical edge v^i_j v^{i+1}_j
// when i and j have equal parity. Subdivision vertices (ids from r^2) split every edge evenly.
struct Wall {
  int r = 0;
  int subdivisions = 0;
  Graph graph;
  std::vector<std::vector<Vertex>> grid;   // grid[i-1][j-1] = v^i_j
  std::vector<Point> position;
  std::vector<std::vector<Vertex>> bricks; // closed walks, subdivision vertices included
};

Ladder build_ladder(int length);
Fan build_fan(int length, int hubs);
Wall build_wall(int r, int subdivisions = 0);

// Vertex -> role label ("u3", "v1", "w2", "v^2_3", "s" for subdivision vertices).
std::map<Vertex, std::string> roles(const Ladder& l);
std::map<Vertex, std::string> roles(const Fan& f);
std::map<Vertex, std::string> roles(const Wall& w);
std::string roles_text(const std::map<Vertex, std::string>& roles);  // "vertex role" per line

// K_p in F(p, p-3).
MinorModel fan_kp_model(int p);
// k disjoint K_p models in F(kp, k(p-3)); copy j uses columns (j-1)p+1..jp and hubs (j-1)(p-3)+1..j(p-3).
std::vector<MinorModel> fan_packing_model(int p, int k);

// First m boundary cycles, outermost first, each a closed vertex walk.
std::vector<std::vector<Vertex>> boundary_cycles(const Wall& w, int m);

}  // namespace minorlab
