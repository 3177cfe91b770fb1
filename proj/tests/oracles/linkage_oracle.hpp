#pragma once

// X-Y linkages counted by edge subsets: a linkage is determined by its edge set, and an edge set
// is a linkage iff its components (plus trivial X∩Y vertices) are X-Y paths covering X ∪ Y.

#include <vector>

#include "minorlab/graph.hpp"

namespace oracle {

using minorlab::Graph;
using minorlab::VertexSet;

inline bool edge_subset_is_linkage(const Graph& g, const std::vector<minorlab::Edge>& edges, unsigned subset,
                                   const VertexSet& x, const VertexSet& y, unsigned* covered = nullptr) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (subset >> i & 1) {
      adj[edges[i].first].push_back(edges[i].second);
      adj[edges[i].second].push_back(edges[i].first);
    }
  for (int v = 0; v < n; ++v)
    if (adj[v].size() > 2) return false;
  std::vector<char> seen(n, 0);
  unsigned cover = 0;
  for (int v = 0; v < n; ++v) {
    bool terminal = x.contains(v) || y.contains(v);
    if (adj[v].empty()) {
      if (terminal && !(x.contains(v) && y.contains(v))) return false;
      if (terminal) cover |= 1u << v;
      continue;
    }
    if (seen[v] || adj[v].size() != 1) continue;
    // Walk the component from this end.
    std::vector<int> walk{v};
    seen[v] = 1;
    int prev = -1, cur = v;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      seen[cur] = 1;
      walk.push_back(cur);
    }
    int a = walk.front(), b = walk.back();
    bool forward = x.contains(a) && y.contains(b), backward = x.contains(b) && y.contains(a);
    if (!forward && !backward) return false;
    for (std::size_t i = 1; i + 1 < walk.size(); ++i)
      if (x.contains(walk[i]) || y.contains(walk[i])) return false;
    if (x.contains(a) && y.contains(a)) return false;  // an end in X∩Y must be a trivial path
    if (x.contains(b) && y.contains(b)) return false;
    for (int w : walk) cover |= 1u << w;
  }
  for (int v = 0; v < n; ++v)
    if (adj[v].size() == 2 && !seen[v]) return false;  // a cycle
  for (int v : x) if (!(cover >> v & 1)) return false;
  for (int v : y) if (!(cover >> v & 1)) return false;
  if (covered) *covered = cover;
  return true;
}

inline int count_linkages(const Graph& g, const VertexSet& x, const VertexSet& y) {
  auto edges = g.edges();
  int count = 0;
  for (unsigned s = 0; s < (1u << edges.size()); ++s) count += edge_subset_is_linkage(g, edges, s, x, y);
  return count;
}

// Number of singular (X, Y, linkage) triples of g: linkages that span g and are unique for their X, Y.
inline int count_singular(const Graph& g) {
  const int n = g.order();
  auto edges = g.edges();
  int total = 0;
  for (unsigned xm = 0; xm < (1u << n); ++xm)
    for (unsigned ym = 0; ym < (1u << n); ++ym) {
      if (__builtin_popcount(xm) != __builtin_popcount(ym) || xm == 0) continue;
      std::vector<int> xs, ys;
      for (int v = 0; v < n; ++v) {
        if (xm >> v & 1) xs.push_back(v);
        if (ym >> v & 1) ys.push_back(v);
      }
      VertexSet x(xs), y(ys);
      int found = 0;
      bool spans = false;
      for (unsigned s = 0; s < (1u << edges.size()) && found < 2; ++s) {
        unsigned cover = 0;
        if (edge_subset_is_linkage(g, edges, s, x, y, &cover)) {
          ++found;
          spans = cover == (1u << n) - 1;
        }
      }
      total += found == 1 && spans;
    }
  return total;
}

}  // namespace oracle
