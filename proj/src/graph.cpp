#include "minorlab/graph.hpp"

#include <algorithm>
#include <string>

#include "minorlab/errors.hpp"

namespace minorlab {

Graph::Graph(int n) {
  if (n < 0) throw DomainError("negative vertex count");
  adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    m_ += a.size();
  }
  m_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  return std::binary_search(a.begin(), a.end(), &a == &adj_[u] ? v : u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::min_degree() const {
  int d = 0;
  for (Vertex v = 0; v < order(); ++v) d = v == 0 ? degree(v) : std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
  return d;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.to_local.assign(g.order(), -1);
  for (Vertex v : keep) {
    if (v < 0 || v >= g.order()) throw DomainError("vertex out of range: " + std::to_string(v));
    out.to_local[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : keep)
    for (Vertex w : g.neighbors(v))
      if (v < w && out.to_local[w] >= 0) edges.emplace_back(out.to_local[v], out.to_local[w]);
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& drop) {
  return induced_subgraph(g, set_difference(VertexSet::range(0, g.order()), drop));
}

Graph contract_edge(const Graph& g, Edge e) {
  auto [a, b] = make_edge(e.first, e.second);
  if (!g.has_edge(a, b))
    throw DomainError("not an edge: " + std::to_string(a) + " " + std::to_string(b));
  auto rename = [&](Vertex v) { return v == b ? a : (v > b ? v - 1 : v); };
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex x = rename(u), y = rename(v);
    if (x != y) edges.push_back(make_edge(x, y));
  }
  return Graph(g.order() - 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

Graph disjoint_copies(const Graph& g, int k) {
  if (k < 0) throw DomainError("negative copy count");
  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c)
    for (auto [u, v] : g.edges()) edges.emplace_back(u + c * g.order(), v + c * g.order());
  return Graph(g.order() * k, edges);
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  auto label = component_labels(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{s.front()};
  seen[s.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w] && s.contains(w)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == s.size();
}

bool is_path(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.order() || seen[p[i]]) return false;
    seen[p[i]] = 1;
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) return false;
  }
  return true;
}

}  // namespace minorlab

namespace minorlab {

std::vector<VertexSet> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;
  int timer = 0;
  struct Frame {
    Vertex v, parent;
    std::size_t next;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (disc[w] < 0) {
          edge_stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v, parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        std::vector<Vertex> members;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          members.push_back(e.first);
          members.push_back(e.second);
          if (e.first == parent && e.second == v) break;
        }
        VertexSet block(std::move(members));
        if (block.size() >= 3) blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace minorlab
