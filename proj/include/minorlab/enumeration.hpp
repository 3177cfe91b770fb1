#pragma once

#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Isomorphism-invariant code: adjacency matrix under the lexicographically least labelling
// reachable by colour refinement plus individualization. Practical up to ~12 vertices.
std::string canonical_code(const Graph& g);
Graph canonical_relabel(const Graph& g);

// All connected graphs on n vertices up to isomorphism, in canonical-code order.
std::vector<Graph> connected_graphs(int n);

}  // namespace minorlab
