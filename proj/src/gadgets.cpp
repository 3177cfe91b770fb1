#include "minorlab/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "minorlab/errors.hpp"

namespace minorlab {

Ladder build_ladder(int length) {
  if (length < 1) throw DomainError("ladder length must be at least 1");
  Ladder l;
  l.length = length;
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) {
    l.top.push_back(i);
    l.bottom.push_back(length + i);
    edges.push_back({i, length + i});
    if (i + 1 < length) {
      edges.push_back({i, i + 1});
      edges.push_back({length + i, length + i + 1});
    }
  }
  l.graph = Graph(2 * length, edges);
  return l;
}

Fan build_fan(int length, int hubs) {
  if (hubs < 0) throw DomainError("fan hub count must be nonnegative");
  Fan f;
  f.ladder = build_ladder(length);
  f.hubs_count = hubs;
  auto edges = f.ladder.graph.edges();
  for (int j = 0; j < hubs; ++j) {
    Vertex w = 2 * length + j;
    f.hubs.push_back(w);
    for (Vertex v : f.ladder.bottom) edges.push_back({v, w});
  }
  f.graph = Graph(2 * length + hubs, edges);
  return f;
}

Wall build_wall(int r, int subdivisions) {
  if (r < 2) throw DomainError("wall size must be at least 2");
  if (subdivisions < 0) throw DomainError("subdivision count must be nonnegative");
  Wall w;
  w.r = r;
  w.subdivisions = subdivisions;
  w.grid.assign(r, std::vector<Vertex>(r));
  w.position.resize(r * r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      Vertex v = (i - 1) * r + (j - 1);
      w.grid[i - 1][j - 1] = v;
      w.position[v] = {double(j), double(-i)};
    }
  auto at = [&](int i, int j) { return w.grid[i - 1][j - 1]; };
  std::vector<Edge> base;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j < r; ++j) base.push_back({at(i, j), at(i, j + 1)});
  for (int i = 1; i < r; ++i)
    for (int j = 1; j <= r; ++j)
      if (i % 2 == j % 2) base.push_back({at(i, j), at(i + 1, j)});

  // Each base edge becomes a path; chain[{a,b}] lists its interior vertices from a to b.
  std::map<Edge, std::vector<Vertex>> chain;
  std::vector<Edge> edges;
  Vertex next = r * r;
  for (auto [a, b] : base) {
    std::vector<Vertex> inner;
    Vertex prev = a;
    for (int s = 1; s <= subdivisions; ++s) {
      Vertex x = next++;
      double t = double(s) / (subdivisions + 1);
      w.position.push_back({w.position[a].first + t * (w.position[b].first - w.position[a].first),
                            w.position[a].second + t * (w.position[b].second - w.position[a].second)});
      inner.push_back(x);
      edges.push_back({prev, x});
      prev = x;
    }
    edges.push_back({prev, b});
    chain[make_edge(a, b)] = inner;
  }
  w.graph = Graph(next, edges);

  auto append = [&](std::vector<Vertex>& walk, Vertex a, Vertex b) {
    walk.push_back(a);
    auto inner = chain.at(make_edge(a, b));
    if (a > b) std::reverse(inner.begin(), inner.end());
    walk.insert(walk.end(), inner.begin(), inner.end());
  };
  for (int i = 1; i < r; ++i)
    for (int j = 1; j + 2 <= r; ++j) {
      if (j % 2 != i % 2) continue;
      std::vector<Vertex> corners{at(i, j), at(i, j + 1), at(i, j + 2), at(i + 1, j + 2), at(i + 1, j + 1), at(i + 1, j)};
      std::vector<Vertex> walk;
      for (int c = 0; c < 6; ++c) append(walk, corners[c], corners[(c + 1) % 6]);
      w.bricks.push_back(std::move(walk));
    }
  return w;
}

std::map<Vertex, std::string> roles(const Ladder& l) {
  std::map<Vertex, std::string> out;
  for (int i = 0; i < l.length; ++i) {
    out[l.top[i]] = "u" + std::to_string(i + 1);
    out[l.bottom[i]] = "v" + std::to_string(i + 1);
  }
  return out;
}

std::map<Vertex, std::string> roles(const Fan& f) {
  auto out = roles(f.ladder);
  for (int j = 0; j < f.hubs_count; ++j) out[f.hubs[j]] = "w" + std::to_string(j + 1);
  return out;
}

std::map<Vertex, std::string> roles(const Wall& w) {
  std::map<Vertex, std::string> out;
  for (int i = 1; i <= w.r; ++i)
    for (int j = 1; j <= w.r; ++j) out[w.grid[i - 1][j - 1]] = "v^" + std::to_string(i) + "_" + std::to_string(j);
  for (Vertex v = w.r * w.r; v < w.graph.order(); ++v) out[v] = "s";
  return out;
}

std::string roles_text(const std::map<Vertex, std::string>& roles) {
  std::ostringstream out;
  for (const auto& [v, role] : roles) out << v << ' ' << role << '\n';
  return out.str();
}

namespace {

MinorModel fan_kp_window(int p, int length, int column0, int hub0) {
  const int l = length;
  auto u = [&](int i) { return column0 + i - 1; };
  auto v = [&](int i) { return l + column0 + i - 1; };
  auto w = [&](int j) { return 2 * l + hub0 + j - 1; };
  MinorModel m;
  for (int i = 1; i <= p - 3; ++i) m.branch_sets.push_back(VertexSet{v(i), w(i)});
  m.branch_sets.push_back(VertexSet{v(p - 2)});
  m.branch_sets.push_back(VertexSet{v(p - 1)});
  m.branch_sets.push_back(VertexSet{v(p), u(p), u(p - 1), u(p - 2)});
  return m;
}

}  // namespace

MinorModel fan_kp_model(int p) {
  if (p < 4) throw DomainError("fan K_p model needs p >= 4");
  return fan_kp_window(p, p, 0, 0);
}

std::vector<MinorModel> fan_packing_model(int p, int k) {
  if (p < 4) throw DomainError("fan K_p model needs p >= 4");
  if (k < 1) throw DomainError("packing size must be at least 1");
  std::vector<MinorModel> out;
  for (int j = 1; j <= k; ++j) out.push_back(fan_kp_window(p, k * p, (j - 1) * p, (j - 1) * (p - 3)));
  return out;
}

std::vector<std::vector<Vertex>> boundary_cycles(const Wall& w, int m) {
  if (m < 1) throw DomainError("boundary cycle count must be at least 1");
  std::vector<std::vector<Vertex>> cycles;
  VertexSet removed;
  while (static_cast<int>(cycles.size()) < m) {
    auto rest = remove_vertices(w.graph, removed);
    auto blocks = biconnected_blocks(rest.graph);
    if (blocks.empty()) {
      throw DomainError("wall H_" + std::to_string(w.r) + " has only " + std::to_string(cycles.size()) +
                        " boundary cycle(s) (requested " + std::to_string(m) + ")");
    }
    auto largest = std::max_element(blocks.begin(), blocks.end(),
                                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    auto block = induced_subgraph(rest.graph, *largest);
    std::vector<Point> pos;
    for (Vertex x : block.to_parent) pos.push_back(w.position[rest.to_parent[x]]);
    auto embedded = embed_by_coordinates(block.graph, pos);
    const std::vector<Vertex>* outer = nullptr;
    double area = -1;
    for (const auto& f : embedded.faces()) {
      double a = std::abs(signed_area(f, pos));
      if (a > area) {
        area = a;
        outer = &f;
      }
    }
    std::vector<Vertex> cycle;
    for (Vertex x : *outer) cycle.push_back(rest.to_parent[block.to_parent[x]]);
    removed = set_union(removed, VertexSet(cycle));
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace minorlab
