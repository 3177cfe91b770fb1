#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "minorlab/vertex_set.hpp"

namespace minorlab {

using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws DomainError on loops or out-of-range endpoints; duplicate edges collapse.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;  // sorted lexicographically
  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
  std::vector<Vertex> to_local;   // parent id -> local id, or -1
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& drop);

// Merged vertex keeps the smaller id; larger ids shift down by one.
Graph contract_edge(const Graph& g, Edge e);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_copies(const Graph& g, int k);

// Component label per vertex, labels numbered by smallest member.
std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
// Whether s is nonempty and induces a connected subgraph.
bool induces_connected(const Graph& g, const VertexSet& s);

// Vertex sets of the 2-connected blocks with at least three vertices, in sorted order.
std::vector<VertexSet> biconnected_blocks(const Graph& g);

using Path = std::vector<Vertex>;
bool is_path(const Graph& g, const Path& p);  // simple path following edges; single vertex allowed

}  // namespace minorlab
