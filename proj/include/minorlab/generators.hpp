#pragma once

#include <cstdint>
#include <random>

#include "minorlab/graph.hpp"
#include "minorlab/treedec.hpp"

namespace minorlab {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound), independent of the standard library's distribution code.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);                // centre 0
Graph grid_graph(int rows, int cols);        // (i,j) -> i*cols + j
Graph wheel_graph(int rim);                  // hub = rim, rim vertices 0..rim-1
Graph petersen_graph();                      // outer 0..4, inner 5..9, spoke i-(i+5)
Graph cube_graph();                          // Q3, vertex bits as coordinates
Graph complete_bipartite(int a, int b);
Graph torus_grid_graph(int m);               // C_m x C_m, (i,j) -> i*m + j
Graph random_gnp(int n, double p, Rng& rng);

struct PartialKTree {
  Graph graph;
  TreeDecomposition decomposition;  // width <= k
};

// Random k-tree on n >= k+1 vertices with each edge kept with probability keep.
PartialKTree random_partial_ktree(int n, int k, double keep, Rng& rng);

}  // namespace minorlab
