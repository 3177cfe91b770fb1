#include "minorlab/linkage.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "minorlab/errors.hpp"
#include "minorlab/flow.hpp"
#include "minorlab/generators.hpp"
#include "minorlab/io.hpp"
#include "minorlab/treedec.hpp"

namespace minorlab {

VertexSet Linkage::vertices() const {
  std::vector<Vertex> all;
  for (const auto& p : paths) all.insert(all.end(), p.begin(), p.end());
  return VertexSet(std::move(all));
}

std::vector<Edge> Linkage::edges() const {
  std::vector<Edge> out;
  for (const auto& p : paths)
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(make_edge(p[i - 1], p[i]));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> validate_linkage(const Graph& g, const Linkage& l) {
  std::vector<char> used(g.order(), 0);
  VertexSet starts, ends;
  for (std::size_t k = 0; k < l.paths.size(); ++k) {
    const auto& p = l.paths[k];
    const std::string tag = "path " + std::to_string(k);
    if (p.empty()) return tag + " is empty";
    for (Vertex v : p)
      if (v < 0 || v >= g.order()) return tag + " leaves the graph";
    if (!is_path(g, p)) return tag + " is not a path of the graph";
    for (Vertex v : p) {
      if (used[v]) return "vertex " + std::to_string(v) + " lies on two paths";
      used[v] = 1;
    }
    if (!l.x.contains(p.front())) return tag + " does not start in X";
    if (!l.y.contains(p.back())) return tag + " does not end in Y";
    for (std::size_t i = 1; i < p.size(); ++i)
      if (l.x.contains(p[i])) return tag + " revisits X";
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (l.y.contains(p[i])) return tag + " meets Y early";
    starts.insert(p.front());
    ends.insert(p.back());
  }
  if (starts != l.x) return std::string("paths do not cover X");
  if (ends != l.y) return std::string("paths do not cover Y");
  return std::nullopt;
}

std::vector<Linkage> enumerate_linkages(const Graph& g, const VertexSet& x, const VertexSet& y, std::size_t limit) {
  std::vector<Linkage> out;
  if (x.size() != y.size()) return out;
  const int n = g.order();
  std::vector<char> terminal(n, 0), used(n, 0), is_y(n, 0);
  for (Vertex v : x) terminal[v] = 1;
  for (Vertex v : y) terminal[v] = is_y[v] = 1;
  std::vector<Vertex> xs(x.begin(), x.end());
  std::vector<Path> chosen;
  Path current;

  std::function<void(std::size_t)> link;
  std::function<void(Vertex, std::size_t)> extend = [&](Vertex v, std::size_t next_x) {
    if (out.size() >= limit) return;
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      if (is_y[w] && !x.contains(w)) {
        used[w] = 1;
        current.push_back(w);
        chosen.push_back(current);
        link(next_x);
        chosen.pop_back();
        current.pop_back();
        used[w] = 0;
      } else if (!terminal[w]) {
        used[w] = 1;
        current.push_back(w);
        extend(w, next_x);
        current.pop_back();
        used[w] = 0;
      }
      if (out.size() >= limit) return;
    }
  };
  link = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == xs.size()) {
      Linkage l{chosen, x, y};
      std::sort(l.paths.begin(), l.paths.end());
      out.push_back(std::move(l));
      return;
    }
    Vertex s = xs[i];
    used[s] = 1;
    Path outer = std::move(current);  // the caller's partial path resumes afterwards
    current = {s};
    if (is_y[s]) {
      chosen.push_back(current);
      link(i + 1);
      chosen.pop_back();
    } else {
      extend(s, i + 1);
    }
    current = std::move(outer);
    used[s] = 0;
  };
  link(0);
  return out;
}

namespace {

bool same_union(const Linkage& a, const Linkage& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

void require_linkage(const Graph& g, const Linkage& l) {
  if (auto bad = validate_linkage(g, l)) throw DomainError("invalid linkage: " + *bad);
}

bool singular_unchecked(const Graph& g, const Linkage& l) {
  if (static_cast<int>(l.vertices().size()) != g.order()) return false;
  for (const auto& other : enumerate_linkages(g, l.x, l.y, 2))
    if (!same_union(other, l)) return false;
  return true;
}

}  // namespace

bool is_singular(const Graph& g, const Linkage& l, SingularOptions opts) {
  require_linkage(g, l);
  if (g.order() > opts.cap)
    throw SizeLimitError("singularity check capped at " + std::to_string(opts.cap) + " vertices");
  return singular_unchecked(g, l);
}

bool check_singular_pathwidth(const Graph& g, const Linkage& l, SingularOptions opts) {
  if (!is_singular(g, l, opts)) throw DomainError("linkage is not singular");
  return exact_pathwidth(g, {.cap = opts.cap}).width <= l.order();
}

std::vector<SingularInstance> singular_linkages(const Graph& g, SingularOptions opts) {
  const int n = g.order();
  if (n > opts.cap) throw SizeLimitError("singular enumeration capped at " + std::to_string(opts.cap) + " vertices");
  // A chord would give a second linkage, so only covers by induced paths can be singular.
  std::vector<Path> induced;
  std::function<void(Path&, std::uint32_t)> grow = [&](Path& p, std::uint32_t mask) {
    if (p.size() == 1 || p.front() < p.back()) induced.push_back(p);
    for (Vertex w : g.neighbors(p.back())) {
      if (mask >> w & 1) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < p.size() && !chord; ++i) chord = g.has_edge(w, p[i]);
      if (chord) continue;
      p.push_back(w);
      grow(p, mask | 1u << w);
      p.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    Path p{v};
    grow(p, 1u << v);
  }
  std::vector<std::vector<int>> containing(n);
  std::vector<std::uint32_t> masks;
  for (std::size_t i = 0; i < induced.size(); ++i) {
    std::uint32_t m = 0;
    for (Vertex v : induced[i]) m |= 1u << v;
    masks.push_back(m);
    containing[*std::min_element(induced[i].begin(), induced[i].end())].push_back(static_cast<int>(i));
  }
  std::vector<SingularInstance> out;
  std::vector<int> cover;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::function<void(std::uint32_t)> search = [&](std::uint32_t covered) {
    if (covered == full) {
      std::vector<int> nontrivial;
      for (int i : cover)
        if (induced[i].size() > 1) nontrivial.push_back(i);
      for (std::uint32_t flips = 0; flips < (1u << nontrivial.size()); ++flips) {
        Linkage l;
        for (int i : cover) {
          Path p = induced[i];
          auto pos = std::find(nontrivial.begin(), nontrivial.end(), i);
          if (pos != nontrivial.end() && (flips >> (pos - nontrivial.begin()) & 1)) std::reverse(p.begin(), p.end());
          l.x.insert(p.front());
          l.y.insert(p.back());
          l.paths.push_back(std::move(p));
        }
        std::sort(l.paths.begin(), l.paths.end());
        if (singular_unchecked(g, l)) out.push_back({std::move(l), -1});
      }
      return;
    }
    Vertex v = __builtin_ctz(~covered);
    for (int i : containing[v]) {
      if (masks[i] & covered) continue;
      cover.push_back(i);
      search(covered | masks[i]);
      cover.pop_back();
    }
  };
  search(0);
  if (!out.empty()) {
    int pw = exact_pathwidth(g, {.cap = opts.cap}).width;
    for (auto& s : out) s.pathwidth = pw;
  }
  return out;
}

Segment segment_of(const Path& path, const std::vector<char>& marked) {
  Segment s;
  bool any = false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!marked[path[i]]) continue;
    if (!any) s.first = i;
    s.last = i;
    any = true;
  }
  if (!any) return s;
  s.kind = s.first == s.last ? SegmentKind::Trivial : SegmentKind::Proper;
  return s;
}

namespace {

std::vector<char> comb_marks(const Graph& g, const Comb& c) {
  std::vector<char> marked(g.order(), 0);
  for (Vertex v : c.h) marked[v] = 1;
  for (const auto& q : c.paths)
    for (Vertex v : q) marked[v] = 1;
  return marked;
}

VertexSet segment_ends(const Path& p, const Segment& s) {
  if (s.kind == SegmentKind::Empty) return {};
  return VertexSet{p[s.first], p[s.last]};
}

}  // namespace

std::vector<Segment> comb_segments(const Graph& g, const Linkage& l, const Comb& c) {
  auto marked = comb_marks(g, c);
  std::vector<Segment> out;
  for (const auto& p : l.paths) out.push_back(segment_of(p, marked));
  return out;
}

std::optional<std::string> validate_comb(const Graph& g, const Linkage& l, const Comb& c) {
  for (Vertex v : c.h)
    if (v < 0 || v >= g.order()) return std::string("h leaves the graph");
  std::vector<char> used(g.order(), 0), on_linkage(g.order(), 0);
  for (const auto& p : l.paths)
    for (Vertex v : p) on_linkage[v] = 1;
  VertexSet finals;
  for (std::size_t k = 0; k < c.paths.size(); ++k) {
    const auto& q = c.paths[k];
    const std::string tag = "comb path " + std::to_string(k);
    if (q.empty()) return tag + " is empty";
    for (Vertex v : q)
      if (v < 0 || v >= g.order()) return tag + " leaves the graph";
    if (!is_path(g, q)) return tag + " is not a path of the graph";
    for (Vertex v : q) {
      if (used[v]) return "vertex " + std::to_string(v) + " lies on two comb paths";
      used[v] = 1;
    }
    if (!c.h.contains(q.front())) return tag + " does not start in h";
    for (std::size_t i = 1; i < q.size(); ++i)
      if (c.h.contains(q[i])) return tag + " returns to h";
    if (!on_linkage[q.back()]) return tag + " does not end on the linkage";
    finals.insert(q.back());
  }
  VertexSet ends;
  auto segments = comb_segments(g, l, c);
  for (std::size_t k = 0; k < l.paths.size(); ++k) ends = set_union(ends, segment_ends(l.paths[k], segments[k]));
  if (ends != finals) return std::string("segment ends differ from final vertices of the comb");
  return std::nullopt;
}

Comb extract_comb(const Graph& g, const Linkage& l, const VertexSet& h, int t) {
  require_linkage(g, l);
  const int n = g.order();
  for (Vertex v : h)
    if (v < 0 || v >= n) throw DomainError("h leaves the graph");
  const VertexSet z = set_union(l.x, l.y);
  std::vector<char> in_h(n, 0), in_z(n, 0);
  for (Vertex v : h) in_h[v] = 1;
  for (Vertex v : z) in_z[v] = 1;
  const auto linkage_edges = l.edges();
  auto on_linkage = [&](Vertex u, Vertex v) {
    return std::binary_search(linkage_edges.begin(), linkage_edges.end(), make_edge(u, v));
  };
  // Split network; an h-(X ∪ Y) path enters h only at its start and leaves X ∪ Y never.
  const int source = 2 * n, sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (Vertex v : h) net.add_arc(source, 2 * v, 1);
  for (Vertex v : z) net.add_arc(2 * v + 1, sink, 1);
  for (auto [u, v] : g.edges()) {
    const int cost = on_linkage(u, v) ? 0 : 1;
    if (!in_z[u] && !in_h[v]) net.add_arc(2 * u + 1, 2 * v, 1, cost);
    if (!in_z[v] && !in_h[u]) net.add_arc(2 * v + 1, 2 * u, 1, cost);
  }
  const int units = net.min_cost_max_flow(source, sink).first;
  if (units < t)
    throw DomainError("only " + std::to_string(units) + " disjoint h-(X u Y) paths exist, fewer than " + std::to_string(t));

  std::vector<std::vector<int>> remaining(net.node_count());
  for (int v = 0; v < net.node_count(); ++v)
    for (int a : net.out_arcs(v))
      if (net.is_forward(a) && net.flow_on(a) > 0) remaining[v].push_back(a);
  Comb comb{h, {}};
  for (int u = 0; u < units; ++u) {
    std::vector<int> nodes{source};
    while (nodes.back() != sink) {
      int a = remaining[nodes.back()].back();
      remaining[nodes.back()].pop_back();
      int next = net.arc_head(a);
      auto loop = std::find(nodes.begin(), nodes.end(), next);
      if (loop != nodes.end()) nodes.erase(loop + 1, nodes.end());
      else nodes.push_back(next);
    }
    Path q;
    for (int node : nodes)
      if (node < 2 * n && node % 2 == 0) q.push_back(node / 2);
    comb.paths.push_back(std::move(q));
  }
  // Cut each path at its first segment end; repeat until the segments settle.
  while (true) {
    VertexSet ends;
    auto segments = comb_segments(g, l, comb);
    for (std::size_t k = 0; k < l.paths.size(); ++k) ends = set_union(ends, segment_ends(l.paths[k], segments[k]));
    bool changed = false;
    for (auto& q : comb.paths) {
      auto it = std::find_if(q.begin(), q.end(), [&](Vertex v) { return ends.contains(v); });
      if (it != q.end() && it + 1 != q.end()) {
        q.erase(it + 1, q.end());
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::sort(comb.paths.begin(), comb.paths.end());
  if (auto bad = validate_comb(g, l, comb)) throw std::logic_error("extracted comb invalid: " + *bad);
  return comb;
}

Comb subcomb(const Graph& g, const Linkage& l, const Comb& c, const Linkage& sub) {
  for (const auto& p : sub.paths)
    if (std::find(l.paths.begin(), l.paths.end(), p) == l.paths.end())
      throw DomainError("sub-linkage path is not a path of the linkage");
  auto marked = comb_marks(g, c);
  VertexSet ends;
  for (const auto& p : sub.paths) ends = set_union(ends, segment_ends(p, segment_of(p, marked)));
  Comb out{c.h, {}};
  for (const auto& q : c.paths)
    if (ends.contains(q.front()) || ends.contains(q.back())) out.paths.push_back(q);
  return out;
}

namespace {

struct CycleIndex {
  std::vector<int> level;     // 0-based cycle index per vertex, -1 if on none
  std::set<Edge> cycle_edges;

  CycleIndex(int n, const std::vector<Cycle>& cycles) : level(n, -1) {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto& c = cycles[i];
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 0 || c[k] >= n) throw DomainError("cycle vertex out of range");
        if (level[c[k]] >= 0) throw DomainError("cycles are not disjoint");
        level[c[k]] = static_cast<int>(i);
        cycle_edges.insert(make_edge(c[k], c[(k + 1) % c.size()]));
      }
    }
  }
  bool along(Vertex a, Vertex b) const { return cycle_edges.count(make_edge(a, b)) > 0; }
};

bool path_orthogonal(const Path& p, const CycleIndex& idx, int s) {
  std::vector<int> first(s, -1), last(s, -1);
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    int c = idx.level[p[i]];
    if (c < 0) continue;
    if (first[c] < 0) first[c] = i;
    else if (last[c] != i - 1 || !idx.along(p[i - 1], p[i])) return false;
    last[c] = i;
  }
  for (int c = 0; c < s; ++c)
    if (first[c] < 0) return false;
  bool forward = true, backward = true;
  for (int c = 0; c + 1 < s; ++c) {
    forward &= last[c] < first[c + 1];
    backward &= first[c] > last[c + 1];
  }
  return forward || backward;
}

}  // namespace

bool is_orthogonal(const Linkage& l, const std::vector<Cycle>& cycles) {
  int n = 0;
  for (const auto& p : l.paths)
    for (Vertex v : p) n = std::max(n, v + 1);
  for (const auto& c : cycles)
    for (Vertex v : c) n = std::max(n, v + 1);
  CycleIndex idx(n, cycles);
  for (const auto& p : l.paths)
    if (!path_orthogonal(p, idx, static_cast<int>(cycles.size()))) return false;
  return true;
}

namespace {

Graph graph_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  auto f = b.edges();
  e.insert(e.end(), f.begin(), f.end());
  return Graph(a.order(), e);
}

// Paths ordered from X' (last cycle) to Y; orthogonal to `chosen`.
std::optional<std::vector<Path>> layered_flow(const Graph& g, const std::vector<Cycle>& chosen, const VertexSet& y,
                                              bool& ambiguous) {
  const int n = g.order();
  const int s = static_cast<int>(chosen.size());
  CycleIndex idx(n, chosen);
  // Components of g minus the chosen cycles, classified by the cycle levels they touch.
  std::vector<int> comp(n, -1);
  std::vector<std::set<int>> touches;
  for (Vertex v = 0; v < n; ++v) {
    if (idx.level[v] >= 0 || comp[v] >= 0) continue;
    const int id = static_cast<int>(touches.size());
    touches.emplace_back();
    std::vector<Vertex> stack{v};
    comp[v] = id;
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      for (Vertex b : g.neighbors(a)) {
        if (idx.level[b] >= 0) touches[id].insert(idx.level[b]);
        else if (comp[b] < 0) {
          comp[b] = id;
          stack.push_back(b);
        }
      }
    }
  }
  // stage[c]: component c connects cycle stage+1 to stage (0-based levels), or -1 for the tail beyond
  // the outermost chosen cycle; unusable otherwise.
  constexpr int kUnused = -2, kTail = -1;
  std::vector<int> stage(touches.size(), kUnused);
  ambiguous = false;
  for (std::size_t c = 0; c < touches.size(); ++c) {
    const auto& t = touches[c];
    if (t.size() == 2 && *t.rbegin() == *t.begin() + 1) stage[c] = *t.begin();
    else if (t.size() == 1 && *t.begin() == 0) stage[c] = kTail;
    if (t.size() > 2 || (t.size() == 2 && *t.rbegin() != *t.begin() + 1)) ambiguous = true;
  }
  const int source = 2 * n, sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (Vertex v : chosen.back()) net.add_arc(source, 2 * v, 1);
  for (Vertex v : y) {
    // A Y vertex inside a connector would let a path skip the outer cycle.
    if (idx.level[v] == 0 || (idx.level[v] < 0 && stage[comp[v]] == kTail)) net.add_arc(2 * v + 1, sink, 1);
    else if (idx.level[v] < 0 && stage[comp[v]] != kUnused) ambiguous = true;
  }
  auto allowed = [&](Vertex a, Vertex b) {
    if (y.contains(a)) return false;
    const int la = idx.level[a], lb = idx.level[b];
    if (la >= 0 && lb >= 0) return (la == lb && idx.along(a, b)) || lb == la - 1;
    if (la >= 0) {
      const int sb = stage[comp[b]];
      return (sb == la - 1 && la > 0) || (sb == kTail && la == 0);
    }
    const int sa = stage[comp[a]];
    if (sa == kUnused) return false;
    if (lb >= 0) return sa != kTail && lb == sa;
    return true;  // same component
  };
  for (auto [u, v] : g.edges()) {
    if (allowed(u, v)) net.add_arc(2 * u + 1, 2 * v, 1);
    if (allowed(v, u)) net.add_arc(2 * v + 1, 2 * u, 1);
  }
  const int units = net.max_flow(source, sink);
  if (units < static_cast<int>(y.size())) return std::nullopt;
  std::vector<std::vector<int>> remaining(net.node_count());
  for (int v = 0; v < net.node_count(); ++v)
    for (int a : net.out_arcs(v))
      if (net.is_forward(a) && net.flow_on(a) > 0) remaining[v].push_back(a);
  std::vector<Path> out;
  for (int u = 0; u < units; ++u) {
    std::vector<int> nodes{source};
    while (nodes.back() != sink) {
      int a = remaining[nodes.back()].back();
      remaining[nodes.back()].pop_back();
      int next = net.arc_head(a);
      auto loop = std::find(nodes.begin(), nodes.end(), next);
      if (loop != nodes.end()) nodes.erase(loop + 1, nodes.end());
      else nodes.push_back(next);
    }
    Path p;
    for (int node : nodes)
      if (node < 2 * n && node % 2 == 0) p.push_back(node / 2);
    // Start where the path leaves the innermost chosen cycle.
    std::size_t start = 0;
    while (start + 1 < p.size() && idx.level[p[start + 1]] == s - 1) ++start;
    out.emplace_back(p.begin() + start, p.end());
  }
  return out;
}

// Backtracking over paths grown from Y inwards; used when the component classification is ambiguous.
class OrthogonalSearch {
 public:
  OrthogonalSearch(const Graph& g, const std::vector<Cycle>& chosen, const VertexSet& y, long budget)
      : g_(g), idx_(g.order(), chosen), s_(static_cast<int>(chosen.size())), y_(y), ys_(y.begin(), y.end()),
        used_(g.order(), 0), budget_(budget) {}

  std::optional<std::vector<Path>> run() {
    if (place(0)) return paths_;
    return std::nullopt;
  }

 private:
  // Places paths k.. on top of the ones already fixed.
  bool place(std::size_t k) {
    if (k == ys_.size()) return true;
    const Vertex start = ys_[k];
    const int level = idx_.level[start];
    if (level > 0) return false;
    used_[start] = 1;
    Path current{start};
    if (grow(current, level, level == 0, k)) return true;
    used_[start] = 0;
    return false;
  }

  // level: deepest chosen cycle entered (-1 none); on_cycle: the last vertex lies on it.
  bool grow(Path& current, int level, bool on_cycle, std::size_t k) {
    if (++nodes_ > budget_) return false;
    if (level == s_ - 1) {
      paths_.emplace_back(current.rbegin(), current.rend());
      if (place(k + 1)) return true;
      paths_.pop_back();
      return false;
    }
    for (Vertex w : g_.neighbors(current.back())) {
      if (used_[w] || y_.contains(w)) continue;
      const int lw = idx_.level[w];
      int next_level = level;
      bool on = false;
      if (lw >= 0) {
        if (lw == level && on_cycle && idx_.along(current.back(), w)) on = true;
        else if (lw == level + 1) next_level = lw, on = true;
        else continue;
      }
      used_[w] = 1;
      current.push_back(w);
      if (grow(current, next_level, on, k)) return true;
      current.pop_back();
      used_[w] = 0;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  CycleIndex idx_;
  int s_;
  VertexSet y_;
  std::vector<Vertex> ys_;
  std::vector<char> used_;
  std::vector<Path> paths_;
  long budget_, nodes_ = 0;
};

}  // namespace

std::optional<Orthogonalized> orthogonalize(const Graph& plane, const Graph& extra, const std::vector<Cycle>& cycles,
                                            const Linkage& l, int s_prime) {
  const int n = plane.order();
  if (extra.order() != n) throw DomainError("plane and extra graphs must share one vertex range");
  const int s = static_cast<int>(cycles.size());
  const int t = l.order();
  if (s_prime < 1 || t < 1) throw DomainError("s' and the linkage order must be positive");
  if (s < s_prime + t) throw DomainError("need at least s' + t cycles");
  CycleIndex idx(n, cycles);
  for (const auto& c : cycles) {
    if (c.size() < 3) throw DomainError("cycle with fewer than 3 vertices");
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!plane.has_edge(c[k], c[(k + 1) % c.size()])) throw DomainError("cycle edge missing from the plane graph");
  }
  for (Vertex v = 0; v < n; ++v)
    if (extra.degree(v) > 0 && (plane.degree(v) > 0 || idx.level[v] >= 0) && idx.level[v] != 0)
      throw DomainError("extra graph meets the plane graph off the outer cycle");
  const Graph g = graph_union(plane, extra);
  require_linkage(g, l);
  for (Vertex v : l.x)
    if (idx.level[v] != s - 1) throw DomainError("X must lie on the innermost cycle");
  for (Vertex v : l.y)
    if (idx.level[v] != 0) throw DomainError("Y must lie on the outer cycle");

  std::vector<std::vector<int>> windows;
  for (int first = s - s_prime; first >= 0; --first) {
    std::vector<int> w;
    for (int j = 0; j < s_prime; ++j) w.push_back(first + j);
    windows.push_back(w);
  }
  auto finish = [&](const std::vector<int>& w, std::vector<Path> paths, const std::string& method) {
    Orthogonalized o;
    for (int i : w) o.cycles.push_back(cycles[i]);
    for (auto& p : paths) {
      if (std::find(o.cycles.back().begin(), o.cycles.back().end(), p.front()) == o.cycles.back().end())
        throw std::logic_error("orthogonalized path does not start on the innermost chosen cycle");
      o.x.insert(p.front());
    }
    std::sort(paths.begin(), paths.end());
    o.linkage = Linkage{std::move(paths), o.x, l.y};
    o.method = method;
    if (auto bad = validate_linkage(g, o.linkage)) throw std::logic_error("orthogonalized linkage invalid: " + *bad);
    if (!is_orthogonal(o.linkage, o.cycles)) throw std::logic_error("orthogonalized linkage is not orthogonal");
    return o;
  };
  for (const auto& w : windows) {
    std::vector<Cycle> chosen;
    for (int i : w) chosen.push_back(cycles[i]);
    const bool starts_inside = std::all_of(l.x.begin(), l.x.end(), [&](Vertex v) { return idx.level[v] == w.back(); });
    if (starts_inside && is_orthogonal(l, chosen)) return finish(w, l.paths, "unchanged");
  }
  for (const auto& w : windows) {
    std::vector<Cycle> chosen;
    for (int i : w) chosen.push_back(cycles[i]);
    // Drop each path's prefix before its last visit to the innermost chosen cycle.
    std::vector<Path> trimmed;
    for (const auto& p : l.paths) {
      std::size_t start = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (idx.level[p[i]] == w.back()) start = i;
      trimmed.emplace_back(p.begin() + start, p.end());
    }
    if (is_orthogonal(Linkage{trimmed, {}, {}}, chosen)) return finish(w, trimmed, "trimmed");
  }
  for (const auto& w : windows) {
    std::vector<Cycle> chosen;
    for (int i : w) chosen.push_back(cycles[i]);
    bool ambiguous = false;
    if (auto paths = layered_flow(g, chosen, l.y, ambiguous)) return finish(w, *paths, "flow");
    if (ambiguous)
      if (auto paths = OrthogonalSearch(g, chosen, l.y, 2'000'000).run()) return finish(w, *paths, "search");
  }
  return std::nullopt;
}

CylinderInstance cylinder_instance(int s, int t, std::uint64_t seed, bool local_peak) {
  if (s < 2 || t < 1) throw DomainError("cylinder instance needs s >= 2 and t >= 1");
  if (local_peak && s < 3) throw DomainError("a local peak needs s >= 3");
  Rng rng(seed);
  const int len = 4 * std::max(t, 2);
  const int n = s * len;
  auto id = [&](int ring, int j) { return (ring - 1) * len + ((j % len) + len) % len; };
  std::set<Edge> plane;
  CylinderInstance inst;
  for (int i = 1; i <= s; ++i) {
    Cycle c;
    for (int j = 0; j < len; ++j) {
      c.push_back(id(i, j));
      plane.insert(make_edge(id(i, j), id(i, j + 1)));
    }
    inst.cycles.push_back(c);
  }
  // Moves shared by every path: walk a[i] steps along ring i, then step out (b[i] = 1 diagonally).
  std::vector<int> a(s + 1), b(s + 1);
  for (int i = 1; i <= s; ++i) {
    a[i] = static_cast<int>(uniform_below(rng, 3));
    b[i] = static_cast<int>(uniform_below(rng, 2));
  }
  const int peak_ring = local_peak ? 2 + static_cast<int>(uniform_below(rng, s - 2)) : -1;
  if (local_peak) {
    a[peak_ring] = 2;
    b[peak_ring] = 0;
    a[peak_ring - 1] = std::min(a[peak_ring - 1], 1);
  }
  for (int k = 0; k < t; ++k) {
    Path p;
    int c = 4 * k;
    for (int i = s; i >= 1; --i) {
      if (i == peak_ring && k == 0) {
        p.push_back(id(i, c));
        p.push_back(id(i - 1, c));
        p.push_back(id(i - 1, c + 1));
        plane.insert(make_edge(id(i, c), id(i - 1, c)));
        plane.insert(make_edge(id(i - 1, c + 1), id(i, c + 1)));
        for (int step = 1; step <= a[i]; ++step) p.push_back(id(i, c + step));
      } else {
        for (int step = 0; step <= a[i]; ++step) p.push_back(id(i, c + step));
      }
      c += a[i];
      if (i > 1) {
        plane.insert(make_edge(id(i, c), id(i - 1, c + b[i])));
        c += b[i];
      }
    }
    inst.linkage.paths.push_back(p);
    inst.linkage.x.insert(p.front());
    inst.linkage.y.insert(p.back());
  }
  for (int i = 2; i <= s; ++i)
    for (int j = 0; j < len; ++j) {
      if (uniform_unit(rng) < 0.3) plane.insert(make_edge(id(i, j), id(i - 1, j)));
      if (uniform_unit(rng) < 0.2) plane.insert(make_edge(id(i, j), id(i - 1, j + 1)));
    }
  inst.plane = Graph(n + 2, std::vector<Edge>(plane.begin(), plane.end()));
  inst.extra = Graph(n + 2, {{id(1, 0), n}, {n, n + 1}, {n + 1, id(1, len / 2)}});
  return inst;
}

nlohmann::json linkage_json(const Linkage& l) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& p : l.paths) paths.push_back(path_json(p));
  return {{"paths", paths}, {"x", vertex_set_json(l.x)}, {"y", vertex_set_json(l.y)}};
}

Linkage linkage_from_json(const nlohmann::json& j) {
  try {
    Linkage l;
    for (const auto& p : j.at("paths")) l.paths.push_back(p.get<Path>());
    l.x = vertex_set_from_json(j.at("x"));
    l.y = vertex_set_from_json(j.at("y"));
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed linkage: ") + e.what());
  }
}

nlohmann::json comb_json(const Comb& c) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& p : c.paths) paths.push_back(path_json(p));
  return {{"h", vertex_set_json(c.h)}, {"paths", paths}};
}

Comb comb_from_json(const nlohmann::json& j) {
  try {
    Comb c;
    c.h = vertex_set_from_json(j.at("h"));
    for (const auto& p : j.at("paths")) c.paths.push_back(p.get<Path>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed comb: ") + e.what());
  }
}

}  // namespace minorlab
