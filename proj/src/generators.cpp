#include "minorlab/generators.hpp"

#include "minorlab/errors.hpp"

namespace minorlab {

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> e;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) e.emplace_back(i * cols + j, i * cols + j + 1);
      if (i + 1 < rows) e.emplace_back(i * cols + j, (i + 1) * cols + j);
    }
  return Graph(rows * cols, e);
}

Graph wheel_graph(int rim) {
  std::vector<Edge> e = cycle_graph(rim).edges();
  for (int i = 0; i < rim; ++i) e.emplace_back(i, rim);
  return Graph(rim + 1, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(make_edge(i, (i + 1) % 5));
    e.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
    e.emplace_back(i, i + 5);
  }
  return Graph(10, e);
}

Graph cube_graph() {
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 1; b < 8; b <<= 1)
      if (v < (v ^ b)) e.emplace_back(v, v ^ b);
  return Graph(8, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

Graph torus_grid_graph(int m) {
  if (m < 3) throw DomainError("torus grid needs m >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      e.push_back(make_edge(i * m + j, i * m + (j + 1) % m));
      e.push_back(make_edge(i * m + j, ((i + 1) % m) * m + j));
    }
  return Graph(m * m, e);
}

Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) e.emplace_back(u, v);
  return Graph(n, e);
}

PartialKTree random_partial_ktree(int n, int k, double keep, Rng& rng) {
  if (k < 1 || n < k + 1) throw DomainError("partial k-tree needs n >= k+1 >= 2");
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> bags{{}};
  for (int v = 0; v <= k; ++v) {
    bags[0].push_back(v);
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  std::vector<Edge> tree_edges;
  for (int v = k + 1; v < n; ++v) {
    int host = static_cast<int>(uniform_below(rng, bags.size()));
    auto clique = bags[host];
    clique.erase(clique.begin() + static_cast<long>(uniform_below(rng, clique.size())));
    for (Vertex u : clique) edges.emplace_back(u, v);
    clique.push_back(v);
    tree_edges.emplace_back(host, static_cast<int>(bags.size()));
    bags.push_back(clique);
  }
  std::vector<Edge> kept;
  for (auto e : edges)
    if (uniform_unit(rng) < keep) kept.push_back(e);
  PartialKTree out{Graph(n, kept), {Graph(static_cast<int>(bags.size()), tree_edges), {}}};
  for (auto& b : bags) out.decomposition.bags.emplace_back(b);
  return out;
}

}  // namespace minorlab
