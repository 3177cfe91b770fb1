#include "minorlab/treedec.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "minorlab/errors.hpp"

namespace minorlab {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int PathDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

TreeDecomposition PathDecomposition::as_tree() const {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) edges.emplace_back(i, i + 1);
  return {Graph(static_cast<int>(bags.size()), edges), bags};
}

std::optional<DecompositionViolation> validate_decomposition(const Graph& g,
                                                             const TreeDecomposition& d) {
  const int t = d.tree.order();
  if (t == 0 || static_cast<int>(d.bags.size()) != t)
    return DecompositionViolation{"tree", {}, "need one bag per tree node and at least one node"};
  if (static_cast<int>(d.tree.size()) != t - 1 || !is_connected(d.tree))
    return DecompositionViolation{"tree", {}, "decomposition tree is not a tree"};
  std::vector<std::vector<int>> trace(g.order());
  for (int node = 0; node < t; ++node)
    for (Vertex v : d.bags[node]) {
      if (v < 0 || v >= g.order())
        return DecompositionViolation{"vertex coverage", {v}, "bag holds a vertex outside the graph"};
      trace[v].push_back(node);
    }
  for (Vertex v = 0; v < g.order(); ++v)
    if (trace[v].empty())
      return DecompositionViolation{"vertex coverage", {v}, "vertex " + std::to_string(v) + " in no bag"};
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (int node : trace[u])
      if (d.bags[node].contains(v)) { ok = true; break; }
    if (!ok)
      return DecompositionViolation{"edge coverage", {u, v},
                                    "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag"};
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!induces_connected(d.tree, VertexSet(trace[v])))
      return DecompositionViolation{"connected trace", {v},
                                    "bags holding vertex " + std::to_string(v) + " are not connected"};
  return std::nullopt;
}

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (n == 0) return {Graph(1), {VertexSet{}}};
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<VertexSet> nbr(n);
  for (Vertex v = 0; v < n; ++v) nbr[v] = VertexSet(g.neighbors(v));
  std::vector<VertexSet> bags(n);
  std::vector<Edge> tree_edges;
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex w : nbr[v])
      if (pos[w] > i) later.push_back(w);
    for (Vertex a : later)
      for (Vertex b : later)
        if (a != b) nbr[a].insert(b);
    VertexSet bag(later);
    bag.insert(v);
    bags[i] = bag;
    if (later.empty()) {
      roots.push_back(i);
    } else {
      int parent = n;
      for (Vertex w : later) parent = std::min(parent, pos[w]);
      tree_edges.emplace_back(i, parent);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) tree_edges.emplace_back(roots[r - 1], roots[r]);
  return {Graph(n, tree_edges), bags};
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

// Vertices outside s ∪ {v} reachable from v through s.
int q_size(const std::vector<Mask>& adj, Mask s, int v) {
  Mask seen = Mask{1} << v, frontier = seen, out = 0;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[__builtin_ctz(f)];
    next &= ~seen;
    seen |= next;
    out |= next & ~s;
    frontier = next & s;
  }
  return __builtin_popcount(out);
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, ExactOptions opts) {
  const int n = g.order();
  if (n > opts.cap || n > 24)
    throw SizeLimitError("exact treewidth capped at " + std::to_string(opts.cap) +
                         " vertices; use heuristic_decomposition");
  if (n == 0) return {-1, decomposition_from_ordering(g, {})};
  auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<int> tw(std::size_t{1} << n, std::numeric_limits<int>::max());
  std::vector<int> choice(std::size_t{1} << n, -1);
  tw[0] = -1;
  for (Mask s = 1; s <= full; ++s) {
    for (Mask f = s; f; f &= f - 1) {
      int v = __builtin_ctz(f);
      Mask rest = s & ~(Mask{1} << v);
      int val = std::max(tw[rest], q_size(adj, rest, v));
      if (val < tw[s]) {
        tw[s] = val;
        choice[s] = v;
      }
    }
  }
  std::vector<Vertex> order(n);
  Mask s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = choice[s];
    s &= ~(Mask{1} << choice[s]);
  }
  auto d = decomposition_from_ordering(g, order);
  return {tw[full], std::move(d)};
}

PathwidthResult exact_pathwidth(const Graph& g, ExactOptions opts) {
  const int n = g.order();
  if (n > opts.cap || n > 24)
    throw SizeLimitError("exact pathwidth capped at " + std::to_string(opts.cap) + " vertices");
  if (n == 0) return {-1, PathDecomposition{{VertexSet{}}}};
  auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  auto boundary = [&](Mask s) {
    Mask b = 0;
    for (Mask f = s; f; f &= f - 1) {
      int v = __builtin_ctz(f);
      if (adj[v] & ~s) b |= Mask{1} << v;
    }
    return b;
  };
  std::vector<int> vs(std::size_t{1} << n, std::numeric_limits<int>::max());
  std::vector<int> choice(std::size_t{1} << n, -1);
  vs[0] = 0;
  for (Mask s = 1; s <= full; ++s) {
    int here = __builtin_popcount(boundary(s));
    for (Mask f = s; f; f &= f - 1) {
      int v = __builtin_ctz(f);
      int val = std::max(vs[s & ~(Mask{1} << v)], here);
      if (val < vs[s]) {
        vs[s] = val;
        choice[s] = v;
      }
    }
  }
  std::vector<Vertex> layout(n);
  Mask s = full;
  for (int i = n - 1; i >= 0; --i) {
    layout[i] = choice[s];
    s &= ~(Mask{1} << choice[s]);
  }
  PathDecomposition pd;
  Mask prefix = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> bag;
    for (Mask f = boundary(prefix); f; f &= f - 1) bag.push_back(__builtin_ctz(f));
    bag.push_back(layout[i]);
    pd.bags.emplace_back(std::move(bag));
    prefix |= Mask{1} << layout[i];
  }
  return {pd.width(), std::move(pd)};
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> nbr(n);
  for (Vertex v = 0; v < n; ++v) nbr[v] = VertexSet(g.neighbors(v));
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_fill = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      const auto& m = nbr[v].members();
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
          if (!nbr[m[a]].contains(m[b])) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    gone[best] = 1;
    order.push_back(best);
    const auto m = nbr[best].members();
    for (Vertex a : m) {
      nbr[a].erase(best);
      for (Vertex b : m)
        if (a != b) nbr[a].insert(b);
    }
  }
  return decomposition_from_ordering(g, order);
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& d, const VertexSet& s) {
  TreeDecomposition out{d.tree, {}};
  out.bags.reserve(d.bags.size());
  for (const auto& b : d.bags) out.bags.push_back(set_intersection(b, s));
  return out;
}

TreeDecomposition subtree_decomposition(const TreeDecomposition& d, const VertexSet& nodes) {
  auto sub = induced_subgraph(d.tree, nodes);
  if (!is_connected(sub.graph) || nodes.empty())
    throw DomainError("tree nodes do not induce a subtree");
  TreeDecomposition out{sub.graph, {}};
  for (Vertex node : sub.to_parent) out.bags.push_back(d.bags[node]);
  return out;
}

}  // namespace minorlab
