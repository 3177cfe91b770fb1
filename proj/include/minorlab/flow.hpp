#pragma once

#include <cstdint>
#include <vector>

#include "minorlab/execution.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

// Directed network with integer capacities and optional per-arc cost.
class FlowNetwork {
 public:
  static constexpr int kInfinite = 1 << 29;

  explicit FlowNetwork(int nodes);
  int add_arc(int from, int to, int capacity, int cost = 0);  // returns arc id
  int node_count() const { return static_cast<int>(out_.size()); }

  // Dinic; stops once `limit` units are routed.
  int max_flow(int s, int t, int limit = kInfinite);
  // Successive shortest paths (Bellman-Ford); maximum flow, then minimum cost among maximum flows.
  std::pair<int, std::int64_t> min_cost_max_flow(int s, int t);

  int flow_on(int arc) const { return arcs_[arc].cap0 - arcs_[arc].cap; }
  int arc_head(int arc) const { return arcs_[arc].to; }
  int arc_tail(int arc) const { return arcs_[arc ^ 1].to; }
  const std::vector<int>& out_arcs(int node) const { return out_[node]; }
  bool is_forward(int arc) const { return (arc & 1) == 0; }
  // Nodes reachable from s in the residual network.
  std::vector<char> residual_reachable(int s) const;

 private:
  struct Arc {
    int to;
    int cap;
    int cap0;
    int cost;
  };
  bool bfs_levels(int s, int t);
  int push(int v, int t, int f);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_, iter_;
};

// Maximum set of vertex-disjoint X-Y paths: each path meets x only at its first vertex and y only
// at its last. A vertex of x∩y forms a trivial path. With internal_only, terminals may be shared and
// paths are only required to be internally disjoint (each edge still used at most once).
std::vector<Path> disjoint_paths(const Graph& g, const VertexSet& x, const VertexSet& y,
                                 bool internal_only = false);

// Paths from v to distinct vertices of targets, pairwise disjoint apart from v.
std::vector<Path> fan_paths(const Graph& g, Vertex v, const VertexSet& targets);

// Maximum number of internally disjoint s-t paths for non-adjacent s, t (capped at limit).
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit = FlowNetwork::kInfinite);

// κ(g). Disconnected graphs and K1 give 0, K_n gives n-1. Fewer than 2 vertices is rejected.
int vertex_connectivity(const Graph& g, Execution exec = Execution::Parallel);

// κ(g) >= k. For k <= 3 this uses articulation points of g - v for every v (linear per vertex);
// larger k runs capped flows from k sources only.
bool is_k_connected(const Graph& g, int k, Execution exec = Execution::Parallel);

}  // namespace minorlab
