#include "minorlab/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "minorlab/errors.hpp"

namespace minorlab {

FlowNetwork::FlowNetwork(int nodes) : out_(nodes) {}

int FlowNetwork::add_arc(int from, int to, int capacity, int cost) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, capacity, cost});
  arcs_.push_back({from, 0, 0, -cost});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

bool FlowNetwork::bfs_levels(int s, int t) {
  level_.assign(out_.size(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int a : out_[v])
      if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[v] + 1;
        q.push(arcs_[a].to);
      }
  }
  return level_[t] >= 0;
}

int FlowNetwork::push(int v, int t, int f) {
  if (v == t) return f;
  for (int& i = iter_[v]; i < static_cast<int>(out_[v].size()); ++i) {
    int a = out_[v][i];
    Arc& arc = arcs_[a];
    if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
    int d = push(arc.to, t, std::min(f, arc.cap));
    if (d > 0) {
      arc.cap -= d;
      arcs_[a ^ 1].cap += d;
      return d;
    }
  }
  return 0;
}

int FlowNetwork::max_flow(int s, int t, int limit) {
  int total = 0;
  while (total < limit && bfs_levels(s, t)) {
    iter_.assign(out_.size(), 0);
    while (total < limit) {
      int f = push(s, t, limit - total);
      if (f == 0) break;
      total += f;
    }
  }
  return total;
}

std::pair<int, std::int64_t> FlowNetwork::min_cost_max_flow(int s, int t) {
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  int flow = 0;
  std::int64_t cost = 0;
  const int n = node_count();
  while (true) {
    std::vector<std::int64_t> dist(n, inf);
    std::vector<int> via(n, -1);
    std::vector<char> queued(n, 0);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    queued[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      queued[v] = 0;
      for (int a : out_[v]) {
        const Arc& arc = arcs_[a];
        if (arc.cap > 0 && dist[v] + arc.cost < dist[arc.to]) {
          dist[arc.to] = dist[v] + arc.cost;
          via[arc.to] = a;
          if (!queued[arc.to]) {
            queued[arc.to] = 1;
            q.push(arc.to);
          }
        }
      }
    }
    if (dist[t] == inf) break;
    int f = kInfinite;
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) f = std::min(f, arcs_[via[v]].cap);
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].cap -= f;
      arcs_[via[v] ^ 1].cap += f;
    }
    flow += f;
    cost += static_cast<std::int64_t>(f) * dist[t];
  }
  return {flow, cost};
}

std::vector<char> FlowNetwork::residual_reachable(int s) const {
  std::vector<char> seen(out_.size(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a : out_[v])
      if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
        seen[arcs_[a].to] = 1;
        stack.push_back(arcs_[a].to);
      }
  }
  return seen;
}

namespace {

// Vertex v splits into in-node 2v and out-node 2v+1; source 2n, sink 2n+1.
struct SplitNetwork {
  FlowNetwork net;
  int n;
  int source() const { return 2 * n; }
  int sink() const { return 2 * n + 1; }
};

SplitNetwork build_split(const Graph& g, const std::vector<char>& shared,
                         const std::vector<char>& removed) {
  const int n = g.order();
  SplitNetwork sn{FlowNetwork(2 * n + 2), n};
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    sn.net.add_arc(2 * v, 2 * v + 1, shared[v] ? FlowNetwork::kInfinite : 1);
  }
  for (auto [u, v] : g.edges()) {
    if (removed[u] || removed[v]) continue;
    sn.net.add_arc(2 * u + 1, 2 * v, 1);
    sn.net.add_arc(2 * v + 1, 2 * u, 1);
  }
  return sn;
}

// Walks flow-carrying arcs from the source; each unit becomes one vertex sequence.
std::vector<Path> decompose(SplitNetwork& sn, int units) {
  auto& net = sn.net;
  std::vector<std::vector<int>> remaining(net.node_count());
  for (int v = 0; v < net.node_count(); ++v)
    for (int a : net.out_arcs(v))
      if (net.is_forward(a))
        for (int f = net.flow_on(a); f > 0; --f) remaining[v].push_back(a);
  std::vector<Path> paths;
  for (int u = 0; u < units; ++u) {
    std::vector<int> nodes{sn.source()};
    while (nodes.back() != sn.sink()) {
      auto& rem = remaining[nodes.back()];
      int a = rem.back();
      rem.pop_back();
      int next = net.arc_head(a);
      auto loop = std::find(nodes.begin(), nodes.end(), next);
      if (loop != nodes.end()) nodes.erase(loop + 1, nodes.end());
      else nodes.push_back(next);
    }
    Path p;
    for (int node : nodes)
      if (node < 2 * sn.n && node % 2 == 0) p.push_back(node / 2);
    paths.push_back(std::move(p));
  }
  return paths;
}

std::vector<Path> terminal_paths(const Graph& g, const VertexSet& x, const VertexSet& y,
                                 bool share_x, bool share_y) {
  const int n = g.order();
  for (Vertex v : x) if (v < 0 || v >= n) throw DomainError("terminal out of range");
  for (Vertex v : y) if (v < 0 || v >= n) throw DomainError("terminal out of range");
  std::vector<Path> trivial;
  std::vector<char> shared(n, 0), removed(n, 0);
  for (Vertex v : set_intersection(x, y)) {
    trivial.push_back({v});
    removed[v] = 1;
  }
  for (Vertex v : x) if (share_x) shared[v] = 1;
  for (Vertex v : y) if (share_y) shared[v] = 1;
  auto sn = build_split(g, shared, removed);
  for (Vertex v : x)
    if (!removed[v]) sn.net.add_arc(sn.source(), 2 * v, share_x ? FlowNetwork::kInfinite : 1);
  for (Vertex v : y)
    if (!removed[v]) sn.net.add_arc(2 * v + 1, sn.sink(), share_y ? FlowNetwork::kInfinite : 1);
  int units = sn.net.max_flow(sn.source(), sn.sink());
  auto raw = decompose(sn, units);
  std::vector<Path> out = trivial;
  for (auto& p : raw) {
    std::size_t first = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (x.contains(p[i])) first = i;
    std::size_t last = first;
    while (!y.contains(p[last])) ++last;
    out.emplace_back(p.begin() + first, p.begin() + last + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Path> disjoint_paths(const Graph& g, const VertexSet& x, const VertexSet& y,
                                 bool internal_only) {
  if (x.empty() || y.empty()) throw DomainError("disjoint_paths needs nonempty terminal sets");
  return terminal_paths(g, x, y, internal_only, internal_only);
}

std::vector<Path> fan_paths(const Graph& g, Vertex v, const VertexSet& targets) {
  VertexSet t = targets;
  t.erase(v);
  if (t.empty()) return {};
  return terminal_paths(g, VertexSet{v}, t, true, false);
}

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  const int n = g.order();
  std::vector<char> shared(n, 0), removed(n, 0);
  shared[s] = shared[t] = 1;
  auto sn = build_split(g, shared, removed);
  return sn.net.max_flow(2 * s + 1, 2 * t, limit);
}

int vertex_connectivity(const Graph& g, Execution exec) {
  const int n = g.order();
  if (n < 2) throw DomainError("vertex connectivity needs at least 2 vertices");
  if (!is_connected(g)) return 0;
  int best = n - 1;
  // Some vertex among the first best+1 avoids a minimum separator, and the far side of that
  // separator contains a later vertex non-adjacent to it.
  for (Vertex i = 0; i < n && i <= best; ++i) {
    std::vector<Vertex> targets;
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) targets.push_back(j);
    const int cap = best;
    std::vector<int> found(targets.size(), cap);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::size_t q = 0; q < targets.size(); ++q)
        found[q] = local_connectivity(g, i, targets[q], cap);
    } else {
      for (std::size_t q = 0; q < targets.size(); ++q)
        found[q] = local_connectivity(g, i, targets[q], cap);
    }
    for (int f : found) best = std::min(best, f);
  }
  return best;
}

namespace {

// Connected and free of cut vertices once `skip` (or nothing, when -1) is removed.
bool biconnected_without(const Graph& g, Vertex skip) {
  const int n = g.order();
  const int alive = n - (skip >= 0 ? 1 : 0);
  if (alive <= 0) return false;
  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    Vertex v, parent;
    std::size_t next;
    int children;
  };
  const Vertex root = skip == 0 ? 1 : 0;
  int timer = 0;
  std::vector<Frame> stack{{root, -1, 0, 0}};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      Vertex w = nb[f.next++];
      if (w == skip) continue;
      if (disc[w] < 0) {
        ++f.children;
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, 0, 0});
      } else if (w != f.parent) {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (done.parent < 0) {
      if (done.children > 1) return false;
      continue;
    }
    low[done.parent] = std::min(low[done.parent], low[done.v]);
    if (done.parent != root && low[done.v] >= disc[done.parent]) return false;
  }
  return timer == alive;
}

}  // namespace

bool is_k_connected(const Graph& g, int k, Execution exec) {
  const int n = g.order();
  if (k <= 0) return true;
  if (n <= k) return false;
  if (k == 1) return is_connected(g);
  if (k == 2) return biconnected_without(g, -1);
  if (k == 3) {
    if (!biconnected_without(g, -1)) return false;
    bool ok = true;
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
      for (Vertex v = 0; v < n; ++v) ok = ok && biconnected_without(g, v);
    } else {
      for (Vertex v = 0; v < n && ok; ++v) ok = biconnected_without(g, v);
    }
    return ok;
  }
  if (g.min_degree() < k || !is_connected(g)) return false;
  // Any separator of size < k misses one of the first k vertices; that vertex has a
  // non-adjacent partner across the separator.
  for (Vertex i = 0; i < k; ++i) {
    std::vector<Vertex> targets;
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) targets.push_back(j);
    bool ok = true;
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
      for (std::size_t q = 0; q < targets.size(); ++q) ok = ok && local_connectivity(g, i, targets[q], k) >= k;
    } else {
      for (std::size_t q = 0; q < targets.size() && ok; ++q) ok = local_connectivity(g, i, targets[q], k) >= k;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace minorlab
