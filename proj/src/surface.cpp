#include "minorlab/surface.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "minorlab/erdos_posa.hpp"
#include "minorlab/errors.hpp"
#include "minorlab/flow.hpp"
#include "minorlab/io.hpp"

namespace minorlab {

namespace {

using Rotation = std::vector<std::vector<Vertex>>;

void insert_after(std::vector<Vertex>& rot, Vertex anchor, const std::vector<Vertex>& items) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  if (it == rot.end()) throw std::logic_error("rotation anchor missing");
  rot.insert(it + 1, items.begin(), items.end());
}

void replace_in(std::vector<Vertex>& rot, Vertex from, Vertex to) {
  auto it = std::find(rot.begin(), rot.end(), from);
  if (it == rot.end()) throw std::logic_error("rotation entry missing");
  *it = to;
}

void require_cycle_faces(const EmbeddedGraph& e, const char* what) {
  if (e.order() == 0 || !e.faces_are_cycles())
    throw DomainError(std::string(what) + " needs every face bounded by a cycle");
}

// Face walk starting with dart a->b.
std::vector<Vertex> walk_from(const EmbeddedGraph& e, Vertex a, Vertex b) {
  std::vector<Vertex> walk{a};
  Vertex u = a, v = b;
  while (v != a || walk.size() == 1) {
    walk.push_back(v);
    Vertex w = e.next_around(v, u);
    u = v;
    v = w;
    if (walk.size() > static_cast<std::size_t>(2 * e.graph().size() + 2)) throw std::logic_error("face walk does not close");
  }
  auto sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::logic_error("face walk is not a cycle");
  return walk;
}

}  // namespace

EmbeddedGraph torus_grid_embedding(int m) {
  if (m < 3) throw DomainError("torus grid needs m >= 3");
  Rotation rot(m * m);
  auto at = [m](int i, int j) { return ((i + m) % m) * m + (j + m) % m; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rot[at(i, j)] = {at(i, j + 1), at(i + 1, j), at(i, j - 1), at(i - 1, j)};
  return EmbeddedGraph(rot);
}

EmbeddedGraph double_torus_embedding() {
  const auto torus = torus_grid_embedding(4);
  const int half = torus.order();
  Rotation rot(2 * half);
  for (Vertex v = 0; v < half; ++v) {
    rot[v] = torus.rotation(v);
    for (Vertex w : torus.rotation(v)) rot[v + half].push_back(w + half);
  }
  // Face f of the first copy and face f of the second, glued with opposite orientations:
  // corner i of the first is joined to corner -i of the second, turning both faces into a tube of quads.
  const auto& f = torus.faces()[0];
  const int len = static_cast<int>(f.size());
  auto corner = [&](int i) { return f[((i % len) + len) % len]; };
  for (int i = 0; i < len; ++i) {
    Vertex a = corner(i), b = corner(-i) + half;
    insert_after(rot[a], corner(i - 1), {b});
    insert_after(rot[b], corner(-i - 1) + half, {a});
  }
  return EmbeddedGraph(rot);
}

EmbeddedGraph refine_all_faces(const EmbeddedGraph& e) {
  require_cycle_faces(e, "refine_all_faces");
  const int n = e.order();
  const auto edges = e.graph().edges();
  const int m = static_cast<int>(edges.size());
  auto sub = [&](Vertex u, Vertex v) {
    auto it = std::lower_bound(edges.begin(), edges.end(), make_edge(u, v));
    return n + static_cast<Vertex>(it - edges.begin());
  };
  auto centre = [&](int f) { return n + m + f; };
  Rotation rot(n + m + e.faces().size());
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : e.rotation(v)) {
      rot[v].push_back(sub(v, w));
      rot[v].push_back(centre(e.face_of(w, v)));
    }
  for (const auto& [u, v] : edges)
    rot[sub(u, v)] = {u, centre(e.face_of(u, v)), v, centre(e.face_of(v, u))};
  for (int f = 0; f < static_cast<int>(e.faces().size()); ++f) {
    const auto& walk = e.faces()[f];
    auto& r = rot[centre(f)];
    for (std::size_t i = walk.size(); i-- > 0;) {
      Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
      r.push_back(sub(a, b));
      r.push_back(a);
    }
  }
  return EmbeddedGraph(rot);
}

BoostedEmbedding boost_degrees(const EmbeddedGraph& e, int root_face, int d) {
  require_cycle_faces(e, "boost_degrees");
  if (d < 3) throw DomainError("boost_degrees needs d >= 3");
  const int faces = static_cast<int>(e.faces().size());
  if (root_face < 0 || root_face >= faces) throw DomainError("root face out of range");

  // Dual adjacency through shared edges, smallest shared edge kept per face pair.
  std::vector<std::map<int, Edge>> dual(faces);
  for (const auto& [u, v] : e.graph().edges()) {
    int a = e.face_of(u, v), b = e.face_of(v, u);
    if (a == b) continue;
    dual[a].emplace(b, Edge{u, v});
    dual[b].emplace(a, Edge{u, v});
  }
  std::vector<int> parent(faces, -2), order{root_face};
  parent[root_face] = -1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (const auto& [g, edge] : dual[order[head]])
      if (parent[g] == -2) {
        parent[g] = order[head];
        order.push_back(g);
      }
  if (static_cast<int>(order.size()) != faces) throw DomainError("boost_degrees needs a connected embedding");

  // Each face is tracked by one dart; subdividing an edge moves darts on it to the new first segment.
  std::vector<std::pair<Vertex, Vertex>> dart(faces);
  for (int f = 0; f < faces; ++f) dart[f] = {e.faces()[f][0], e.faces()[f][1]};
  for (int f = 0; f < faces; ++f) {
    if (parent[f] < 0) continue;
    auto [u, v] = dual[f].at(parent[f]);
    dart[f] = e.face_of(u, v) == f ? std::pair{u, v} : std::pair{v, u};
  }

  EmbeddedGraph cur = e;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int f = *it;
    if (parent[f] < 0) continue;
    const auto [u, v] = dart[f];
    const auto walk = walk_from(cur, u, v);  // u, v, x_1 .. x_m
    const int m = static_cast<int>(walk.size()) - 2;
    const int len = m * (d - 1) + 1;
    Rotation rot = cur.rotations();
    const Vertex base = cur.order();
    rot.resize(base + len);
    // z_j = base + j - 1 runs from v's end (j = 1) to u's end (j = len).
    auto z = [&](int j) { return base + j - 1; };
    auto toward_u = [&](int j) { return j == len ? u : z(j + 1); };
    auto toward_v = [&](int j) { return j == 1 ? v : z(j - 1); };
    replace_in(rot[u], v, z(len));
    replace_in(rot[v], u, z(1));
    std::vector<std::vector<Vertex>> attached(len + 1);  // x's at each z, nearest u first
    for (int i = m; i >= 1; --i) {
      const int lo = (i - 1) * (d - 1) + 1, hi = lo + d - 1;
      std::vector<Vertex> block;
      for (int j = lo; j <= hi; ++j) {
        block.push_back(z(j));
        attached[j].push_back(walk[i + 1]);
      }
      insert_after(rot[walk[i + 1]], walk[i], block);  // walk[1] is v
    }
    for (int j = 1; j <= len; ++j) {
      auto& r = rot[z(j)];
      r.push_back(toward_u(j));
      r.insert(r.end(), attached[j].begin(), attached[j].end());
      r.push_back(toward_v(j));
    }
    for (auto& [a, b] : dart) {
      if (a == u && b == v) b = z(len);
      else if (a == v && b == u) b = z(1);
    }
    cur = EmbeddedGraph(std::move(rot));
  }
  auto disk = walk_from(cur, dart[root_face].first, dart[root_face].second);
  return {std::move(cur), std::move(disk)};
}

bool genus_budget_ok(const std::vector<int>& clique_sizes, int p) {
  long long lhs = 0;
  for (int l : clique_sizes) {
    if (l < 5) throw DomainError("genus budget needs clique sizes >= 5");
    lhs += ((l - 3) * static_cast<long long>(l - 4) + 5) / 6;
  }
  // lhs <= (p-3)(p-4)/6 + 1  <=>  6 lhs <= (p-3)(p-4) + 6
  return 6 * lhs <= static_cast<long long>(p - 3) * (p - 4) + 6;
}

PackingReplay replay_packing_exclusion(int p, int k) {
  const long long z = tight_connectivity(p, k);
  // t members hold l_i <= p-4 apexes each, the other k-t hold at least p-3.
  // Enumerate multisets of the l_i by counts of each value, pruned by the apex total.
  PackingReplay out;
  out.excluded = true;
  const long long kLimit = 50'000'000;
  std::vector<int> sizes;
  std::function<void(int, int, long long)> rec = [&](int value, int t, long long used) {
    if (value > p - 4) {
      if (used + static_cast<long long>(k - t) * (p - 3) > z) return;
      if (++out.distributions > kLimit) throw SizeLimitError("packing replay exceeds enumeration limit");
      if (genus_budget_ok(sizes, p)) out.excluded = false;
      return;
    }
    int pushed = 0;
    for (int c = 0; t + c <= k && used + static_cast<long long>(c) * value <= z; ++c) {
      rec(value + 1, t + c, used + static_cast<long long>(c) * value);
      sizes.push_back(p - value + 1);
      ++pushed;
    }
    sizes.resize(sizes.size() - pushed);
  };
  rec(0, 0, 0);
  return out;
}

TightConstruction build_tight_construction(const EmbeddedGraph& base, int n, int k, int p, int r,
                                           const TightOptions& opts) {
  if (n < 1 || r < 1) throw DomainError("tight construction needs n, r >= 1");
  const int d = tight_connectivity(p, k);
  require_cycle_faces(base, "build_tight_construction");
  if (base.euler_genus() == 0) throw DomainError("tight construction needs a non-planar base embedding");
  if (!is_k_connected(base.graph(), 3, opts.execution))
    throw DomainError("tight construction needs a 3-connected base");

  TightConstruction out;
  out.n = n;
  out.k = k;
  out.p = p;
  out.r = r;
  out.connectivity_target = d;

  FaceWidthOptions fwo{opts.exact_cap, opts.execution};
  EmbeddedGraph cur = base;
  auto& cert = out.face_width;
  cert.base_value = face_width(base, fwo).value;
  cert.value = cert.base_value;
  while (cert.value < n + r) {
    cur = refine_all_faces(cur);
    ++cert.refinements;
    if (cert.exact && cur.order() + static_cast<int>(cur.faces().size()) <= opts.exact_cap) {
      cert.value = face_width(cur, fwo).value;
    } else {
      cert.exact = false;
      cert.value *= 2;
    }
  }

  auto boosted = boost_degrees(cur, 0, d);
  out.core = std::move(boosted.embedding);
  out.disk = std::move(boosted.disk);
  const int core_n = out.core.order();
  std::vector<Edge> edges = out.core.graph().edges();
  for (int i = 0; i < d; ++i) {
    out.z.insert(core_n + i);
    for (Vertex v : out.disk) edges.push_back(make_edge(core_n + i, v));
  }
  out.g = Graph(core_n + d, edges);

  auto sorted_disk = out.disk;
  std::sort(sorted_disk.begin(), sorted_disk.end());
  for (const auto& f : out.core.faces()) {
    auto s = f;
    std::sort(s.begin(), s.end());
    if (s == sorted_disk && s.size() == f.size()) out.disk_is_face = true;
  }
  if (out.g.order() <= opts.connectivity_cap) out.connectivity_holds = is_k_connected(out.g, d, opts.execution);
  out.packing = replay_packing_exclusion(p, k);
  out.conditional_claims = {
      "deleting any n vertices leaves face-width >= r in the same surface (fw(G'-X) >= fw(G') - |X|)",
      "if r is at least the face-width threshold forcing a K_p minor in this surface, no hitting set of size <= n "
      "exists",
  };
  return out;
}

nlohmann::json tight_certificate_json(const TightConstruction& t) {
  nlohmann::json j;
  j["parameters"] = {{"n", t.n}, {"k", t.k}, {"p", t.p}, {"r", t.r}};
  j["apex_count"] = t.z.size();
  j["apex"] = vertex_set_json(t.z);
  j["disk"] = t.disk;
  j["disk_is_face"] = t.disk_is_face;
  j["core_order"] = t.core.order();
  j["order"] = t.g.order();
  j["size"] = t.g.size();
  j["euler_genus"] = t.core.euler_genus();
  j["connectivity"] = {{"target", t.connectivity_target},
                       {"verified", t.connectivity_holds ? nlohmann::json(*t.connectivity_holds) : nlohmann::json()}};
  j["face_width"] = {{"value", t.face_width.value},
                     {"mode", t.face_width.exact ? "exact" : "doubling"},
                     {"base", t.face_width.base_value},
                     {"refinements", t.face_width.refinements}};
  j["packing_exclusion"] = {{"holds", t.packing.excluded}, {"distributions", t.packing.distributions}};
  j["conditional_claims"] = t.conditional_claims;
  return j;
}

}  // namespace minorlab
