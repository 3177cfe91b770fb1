#include "minorlab/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "minorlab/errors.hpp"

namespace minorlab {

EmbeddedGraph::EmbeddedGraph(std::vector<std::vector<Vertex>> rotation) : rotation_(std::move(rotation)) {
  const int n = static_cast<int>(rotation_.size());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex w : rotation_[v]) {
      if (w < 0 || w >= n) throw DomainError("invalid rotation: neighbour out of range at vertex " + std::to_string(v));
      if (w == v) throw DomainError("invalid rotation: loop at vertex " + std::to_string(v));
      if (!seen.insert(w).second) throw DomainError("invalid rotation: repeated neighbour at vertex " + std::to_string(v));
      edges.push_back(make_edge(v, w));
    }
  }
  graph_ = Graph(n, edges);
  for (Vertex v = 0; v < n; ++v)
    if (graph_.degree(v) != static_cast<int>(rotation_[v].size()))
      throw DomainError("invalid rotation: adjacency of vertex " + std::to_string(v) + " is not symmetric");
  std::vector<std::map<Vertex, int>> pos(n);
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) pos[v][rotation_[v][i]] = i;
  slot_of_.resize(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : rotation_[v]) slot_of_[v].push_back(pos[w].at(v));
  dart_face_.resize(n);
  for (Vertex v = 0; v < n; ++v) dart_face_[v].assign(rotation_[v].size(), -1);
  for (Vertex u = 0; u < n; ++u)
    for (int i = 0; i < static_cast<int>(rotation_[u].size()); ++i) {
      if (dart_face_[u][i] >= 0) continue;
      const int f = static_cast<int>(faces_.size());
      std::vector<Vertex> walk;
      Vertex a = u;
      int s = i;
      while (dart_face_[a][s] < 0) {
        dart_face_[a][s] = f;
        walk.push_back(a);
        Vertex b = rotation_[a][s];
        int back = slot_of_[a][s];  // position of a in rotation of b
        s = (back + 1) % static_cast<int>(rotation_[b].size());
        a = b;
      }
      faces_.push_back(std::move(walk));
    }
}

int EmbeddedGraph::slot(Vertex v, Vertex w) const {
  const auto& r = rotation_[v];
  auto it = std::find(r.begin(), r.end(), w);
  if (it == r.end()) throw DomainError("not an edge: " + std::to_string(v) + " " + std::to_string(w));
  return static_cast<int>(it - r.begin());
}

Vertex EmbeddedGraph::next_around(Vertex v, Vertex w) const {
  const auto& r = rotation_[v];
  return r[(slot(v, w) + 1) % r.size()];
}

Vertex EmbeddedGraph::prev_around(Vertex v, Vertex w) const {
  const auto& r = rotation_[v];
  return r[(slot(v, w) + r.size() - 1) % r.size()];
}

int EmbeddedGraph::euler_characteristic() const {
  return order() - static_cast<int>(graph_.size()) + static_cast<int>(faces_.size());
}

int EmbeddedGraph::euler_genus() const {
  auto label = component_labels(graph_);
  const int c = order() == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<long> chi(c, 0);
  std::vector<char> has_edge(c, 0);
  for (Vertex v = 0; v < order(); ++v) {
    chi[label[v]] += 1;
    if (graph_.degree(v) > 0) has_edge[label[v]] = 1;
  }
  for (auto [u, v] : graph_.edges()) chi[label[u]] -= 1;
  for (const auto& f : faces_) chi[label[f[0]]] += 1;
  long genus = 0;
  for (int i = 0; i < c; ++i)
    if (has_edge[i]) genus += 2 - chi[i];
  return static_cast<int>(genus);
}

bool EmbeddedGraph::faces_are_cycles() const {
  for (const auto& f : faces_) {
    if (f.size() < 3) return false;
    std::vector<Vertex> s = f;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  return true;
}

EmbeddedGraph embed_by_coordinates(const Graph& g, const std::vector<Point>& pos) {
  std::vector<std::vector<Vertex>> rot(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    rot[v] = g.neighbors(v);
    auto angle = [&](Vertex w) { return std::atan2(pos[w].second - pos[v].second, pos[w].first - pos[v].first); };
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return EmbeddedGraph(std::move(rot));
}

double signed_area(const std::vector<Vertex>& walk, const std::vector<Point>& pos) {
  double a = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto& p = pos[walk[i]];
    const auto& q = pos[walk[(i + 1) % walk.size()]];
    a += p.first * q.second - q.first * p.second;
  }
  return a / 2;
}

EmbeddedGraph read_rotation_system(std::istream& in) {
  std::string line;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next()) throw ParseError("rotation system: missing vertex count");
  long n;
  std::istringstream head(line);
  if (!(head >> n) || n < 0) throw ParseError("rotation system: bad vertex count");
  std::vector<std::vector<Vertex>> rot(n);
  for (long v = 0; v < n; ++v) {
    if (!std::getline(in, line)) throw ParseError("rotation system: missing rotation for vertex " + std::to_string(v));
    std::istringstream row(line);
    long w;
    while (row >> w) rot[v].push_back(static_cast<Vertex>(w));
  }
  try {
    return EmbeddedGraph(std::move(rot));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

void write_rotation_system(std::ostream& out, const EmbeddedGraph& e) {
  out << e.order() << '\n';
  for (Vertex v = 0; v < e.order(); ++v) {
    for (std::size_t i = 0; i < e.rotation(v).size(); ++i) out << (i ? " " : "") << e.rotation(v)[i];
    out << '\n';
  }
}

Contractibility cut_contractibility(const EmbeddedGraph& e, const std::vector<Vertex>& cycle) {
  const int n = e.order();
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw DomainError("not a cycle: fewer than 3 vertices");
  std::vector<int> index(n, -1);
  for (int i = 0; i < len; ++i) {
    if (cycle[i] < 0 || cycle[i] >= n || index[cycle[i]] >= 0) throw DomainError("not a cycle: bad or repeated vertex");
    index[cycle[i]] = i;
  }
  for (int i = 0; i < len; ++i)
    if (!e.graph().has_edge(cycle[i], cycle[(i + 1) % len])) throw DomainError("not a cycle: missing edge");
  auto on_cycle_edge = [&](Vertex x, Vertex y) {
    if (index[x] < 0 || index[y] < 0) return false;
    int d = (index[x] - index[y] + len) % len;
    return d == 1 || d == len - 1;
  };
  const int faces = static_cast<int>(e.faces().size());
  std::vector<int> side(faces, -1);
  std::deque<int> queue[2];
  std::vector<int> members[2];
  auto claim = [&](int f, int s) -> bool {  // false on conflict
    if (side[f] == s) return true;
    if (side[f] >= 0) return false;
    side[f] = s;
    queue[s].push_back(f);
    members[s].push_back(f);
    return true;
  };
  for (int i = 0; i < len; ++i) {
    Vertex v = cycle[i], a = cycle[(i + len - 1) % len], b = cycle[(i + 1) % len];
    int s = 0;
    for (Vertex x = a;; x = e.next_around(v, x)) {
      if (x == b) s = 1;
      if (!claim(e.face_of(x, v), s)) return Contractibility::Noncontractible;
      if (e.next_around(v, x) == a) break;
    }
  }
  // Grow both sides in lockstep so that a small disc is recognised after visiting only its faces.
  int done = -1;
  while (done < 0) {
    for (int s = 0; s < 2 && done < 0; ++s) {
      if (queue[s].empty()) {
        done = s;
        break;
      }
      int f = queue[s].front();
      queue[s].pop_front();
      const auto& walk = e.faces()[f];
      for (std::size_t i = 0; i < walk.size(); ++i) {
        Vertex x = walk[i], y = walk[(i + 1) % walk.size()];
        if (on_cycle_edge(x, y)) continue;
        if (!claim(e.face_of(y, x), s)) return Contractibility::Noncontractible;
      }
    }
  }
  // The finished side is closed under crossing non-cycle edges, so the cycle separates.
  std::set<Vertex> verts;
  std::set<Edge> edges;
  for (int f : members[done]) {
    const auto& walk = e.faces()[f];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      Vertex x = walk[i], y = walk[(i + 1) % walk.size()];
      if (index[x] < 0) verts.insert(x);
      if (!on_cycle_edge(x, y)) edges.insert(make_edge(x, y));
    }
  }
  const long chi_side = static_cast<long>(len + verts.size()) - static_cast<long>(len + edges.size()) +
                        static_cast<long>(members[done].size() + 1);
  if (chi_side == 2) return Contractibility::Contractible;
  // Characteristic of the component containing the cycle, then of the other capped side.
  auto label = component_labels(e.graph());
  const int comp = label[cycle[0]];
  long chi = 0;
  for (Vertex v = 0; v < n; ++v) if (label[v] == comp) ++chi;
  for (auto [u, v] : e.graph().edges()) if (label[u] == comp) --chi;
  for (const auto& f : e.faces()) if (label[f[0]] == comp) ++chi;
  const long chi_other = chi + 2 - chi_side;
  return chi_other == 2 ? Contractibility::Contractible : Contractibility::Noncontractible;
}

EmbeddedGraph radial_graph(const EmbeddedGraph& e) {
  const int n = e.order();
  const int faces = static_cast<int>(e.faces().size());
  std::vector<std::vector<Vertex>> rot(n + faces);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : e.rotation(v)) rot[v].push_back(n + e.face_of(w, v));
  for (int f = 0; f < faces; ++f) {
    const auto& walk = e.faces()[f];
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) rot[n + f].push_back(*it);
  }
  try {
    return EmbeddedGraph(std::move(rot));
  } catch (const DomainError&) {
    throw DomainError("radial graph is not simple: some face meets a vertex twice");
  }
}

namespace {

struct Candidate {
  std::int64_t weight;
  std::vector<Vertex> cycle;
};

// Shortest noncontractible cycle of the radial graph under edge weights w(v, f) = cost[v].
// Every shortest such cycle arises, for any of its nodes as root, from a shortest-path tree plus
// one non-tree edge.
std::optional<Candidate> shortest_noncontractible(const EmbeddedGraph& radial, int vertices,
                                                  const std::vector<std::int64_t>& cost, Execution exec) {
  const int nodes = radial.order();
  const Graph& g = radial.graph();
  auto weight = [&](Vertex a, Vertex b) { return cost[a < vertices ? a : b]; };
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::atomic<std::int64_t> best{inf};
  std::vector<std::optional<Candidate>> per_root(vertices);

  auto run_root = [&](int root) {
    std::vector<std::int64_t> dist(nodes, inf);
    std::vector<int> parent(nodes, -1), depth(nodes, 0);
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[root] = 0;
    pq.push({0, root});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v]) continue;
      for (Vertex w : g.neighbors(v)) {
        std::int64_t nd = d + weight(v, w);
        if (nd < dist[w] || (nd == dist[w] && parent[w] > v)) {
          bool improved = nd < dist[w];
          dist[w] = nd;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          if (improved) pq.push({nd, w});
        }
      }
    }
    std::vector<std::tuple<std::int64_t, int, int>> cands;
    for (auto [a, b] : g.edges()) {
      if (parent[a] == b || parent[b] == a || dist[a] >= inf || dist[b] >= inf) continue;
      int x = a, y = b;
      while (x != y) {
        if (depth[x] >= depth[y]) x = parent[x];
        else y = parent[y];
      }
      std::int64_t w = dist[a] + dist[b] + weight(a, b) - 2 * dist[x];
      cands.emplace_back(w, a, b);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [w, a, b] : cands) {
      if (w > best.load(std::memory_order_relaxed)) break;
      std::vector<Vertex> up, down;
      int x = a, y = b;
      while (x != y) {
        if (depth[x] >= depth[y]) {
          up.push_back(x);
          x = parent[x];
        } else {
          down.push_back(y);
          y = parent[y];
        }
      }
      up.push_back(x);
      std::vector<Vertex> cycle(up.rbegin(), up.rend());  // lca .. a
      cycle.insert(cycle.end(), down.begin(), down.end()); // b .. below lca
      if (cut_contractibility(radial, cycle) == Contractibility::Noncontractible) {
        per_root[root] = Candidate{w, cycle};
        std::int64_t cur = best.load();
        while (w < cur && !best.compare_exchange_weak(cur, w)) {}
        return;
      }
    }
  };

  // Roots range over vertex nodes: every radial cycle passes through one.
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int root = 0; root < vertices; ++root) run_root(root);
  } else {
    for (int root = 0; root < vertices; ++root) run_root(root);
  }
  std::optional<Candidate> out;
  for (auto& c : per_root)
    if (c && (!out || c->weight < out->weight)) out = std::move(c);
  return out;
}

FaceWidth weighted_face_width(const EmbeddedGraph& e, const std::vector<char>& kept, const FaceWidthOptions& opts) {
  FaceWidth fw;
  if (e.euler_genus() == 0) {
    fw.unbounded = true;
    return fw;
  }
  const int n = e.order();
  const int nodes = n + static_cast<int>(e.faces().size());
  if (nodes > opts.cap)
    throw SizeLimitError("radial graph has " + std::to_string(nodes) + " nodes, cap is " + std::to_string(opts.cap));
  auto radial = radial_graph(e);
  // A cycle meeting m vertex nodes, j of them kept, weighs 2m + 2jH; with H > nodes, j = weight / 2H.
  const std::int64_t h = nodes + 1;
  std::vector<std::int64_t> cost(n);
  for (Vertex v = 0; v < n; ++v) cost[v] = 1 + (kept[v] ? h : 0);
  auto best = shortest_noncontractible(radial, n, cost, opts.execution);
  if (!best) throw std::logic_error("positive genus but no noncontractible radial cycle found");
  fw.value = static_cast<int>(best->weight / (2 * h));
  fw.radial_cycle = std::move(best->cycle);
  return fw;
}

}  // namespace

FaceWidth face_width(const EmbeddedGraph& e, const FaceWidthOptions& opts) {
  return weighted_face_width(e, std::vector<char>(e.order(), 1), opts);
}

FaceWidth face_width_after_deletion(const EmbeddedGraph& e, const VertexSet& x, const FaceWidthOptions& opts) {
  std::vector<char> kept(e.order(), 1);
  for (Vertex v : x) {
    if (v < 0 || v >= e.order()) throw DomainError("deletion vertex out of range");
    kept[v] = 0;
  }
  return weighted_face_width(e, kept, opts);
}

bool face_width_deletion_check(const EmbeddedGraph& e, const VertexSet& x, const FaceWidthOptions& opts) {
  auto before = face_width(e, opts);
  if (before.unbounded) return true;
  auto after = face_width_after_deletion(e, x, opts);
  return after.value >= before.value - static_cast<int>(x.size());
}

}  // namespace minorlab
