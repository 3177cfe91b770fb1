#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

struct TreeDecomposition {
  Graph tree;                    // nodes 0..t-1
  std::vector<VertexSet> bags;   // one per tree node

  int width() const;             // max bag size - 1; -1 when every bag is empty
};

struct PathDecomposition {
  std::vector<VertexSet> bags;

  int width() const;
  TreeDecomposition as_tree() const;
};

struct DecompositionViolation {
  std::string axiom;             // "vertex coverage", "edge coverage", "connected trace", "tree"
  std::vector<Vertex> witness;
  std::string message;
};

std::optional<DecompositionViolation> validate_decomposition(const Graph& g,
                                                             const TreeDecomposition& d);

struct ExactOptions {
  int cap = 12;
};

struct TreewidthResult {
  int width;
  TreeDecomposition decomposition;
};

struct PathwidthResult {
  int width;
  PathDecomposition decomposition;
};

TreewidthResult exact_treewidth(const Graph& g, ExactOptions opts = {});
PathwidthResult exact_pathwidth(const Graph& g, ExactOptions opts = {.cap = 10});

// Min-fill elimination, ties by lowest id.
TreeDecomposition heuristic_decomposition(const Graph& g);

// Decomposition induced by an elimination ordering (bag of v = v plus its later neighbours in the
// filled graph), with tree edges to the earliest later-eliminated bag member.
TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order);

TreeDecomposition restrict_decomposition(const TreeDecomposition& d, const VertexSet& s);

// Keeps only the given tree nodes (which must induce a subtree), renumbered in ascending order.
TreeDecomposition subtree_decomposition(const TreeDecomposition& d, const VertexSet& nodes);

}  // namespace minorlab
