#include "minorlab/minor.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <deque>
#include <set>
#include <stdexcept>

#include "minorlab/errors.hpp"

namespace minorlab {

namespace {

template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return w[i >> 6] >> (i & 63) & 1; }
  bool any() const {
    for (auto x : w) if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  int first() const {
    for (int k = 0; k < W; ++k)
      if (w[k]) return k * 64 + __builtin_ctzll(w[k]);
    return -1;
  }
  Bits& operator|=(const Bits& o) {
    for (int k = 0; k < W; ++k) w[k] |= o.w[k];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) {
    for (int k = 0; k < W; ++k) a.w[k] &= b.w[k];
    return a;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (int k = 0; k < W; ++k) r.w[k] &= ~o.w[k];
    return r;
  }
  template <class F>
  void for_each(F f) const {
    for (int k = 0; k < W; ++k)
      for (std::uint64_t x = w[k]; x; x &= x - 1) f(k * 64 + __builtin_ctzll(x));
  }
  static Bits below(int r) {
    Bits b;
    for (int i = 0; i < r; ++i) b.set(i);
    return b;
  }
};

struct ReducedHost {
  Graph graph;
  std::vector<std::vector<Vertex>> rep;  // reduced vertex -> original vertices
};

// Exact for patterns of minimum degree delta: isolated vertices go when delta >= 1, leaves when
// delta >= 2, and degree-2 vertices are contracted into their smaller neighbour when delta >= 3.
ReducedHost reduce_host(const Graph& host, int delta) {
  const int n = host.order();
  std::vector<std::set<Vertex>> adj(n);
  std::vector<std::vector<Vertex>> rep(n);
  std::vector<char> alive(n, 1);
  for (Vertex v = 0; v < n; ++v) {
    adj[v].insert(host.neighbors(v).begin(), host.neighbors(v).end());
    rep[v] = {v};
  }
  std::deque<Vertex> work;
  for (Vertex v = 0; v < n; ++v) work.push_back(v);
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    if (!alive[v]) continue;
    const auto d = adj[v].size();
    if ((d == 0 && delta >= 1) || (d == 1 && delta >= 2)) {
      for (Vertex w : adj[v]) {
        adj[w].erase(v);
        work.push_back(w);
      }
      adj[v].clear();
      alive[v] = 0;
    } else if (d == 2 && delta >= 3) {
      Vertex a = *adj[v].begin(), b = *adj[v].rbegin();
      adj[a].erase(v);
      adj[b].erase(v);
      adj[a].insert(b);
      adj[b].insert(a);
      rep[a].insert(rep[a].end(), rep[v].begin(), rep[v].end());
      adj[v].clear();
      alive[v] = 0;
      work.push_back(a);
      work.push_back(b);
    }
  }
  std::vector<Vertex> local(n, -1);
  ReducedHost out;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) {
      local[v] = static_cast<Vertex>(out.rep.size());
      std::sort(rep[v].begin(), rep[v].end());
      out.rep.push_back(rep[v]);
    }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v])
      for (Vertex w : adj[v])
        if (v < w) edges.emplace_back(local[v], local[w]);
  out.graph = Graph(static_cast<int>(out.rep.size()), edges);
  return out;
}

ReducedHost identity_host(const Graph& host) {
  ReducedHost out{host, {}};
  for (Vertex v = 0; v < host.order(); ++v) out.rep.push_back({v});
  return out;
}

struct PatternInfo {
  int h = 0;
  std::vector<int> order;
  std::vector<Edge> edges;                   // by position of the later-rooted endpoint
  std::vector<std::vector<int>> root_after;  // root must exceed the roots of these vertices
};

// Roots increase along each class of interchangeable (twin) pattern vertices, and across copies
// when the pattern is a disjoint union of `copies` identical blocks.
PatternInfo analyse_pattern(const Graph& pattern, int copies) {
  PatternInfo p;
  p.h = pattern.order();
  p.order.resize(p.h);
  for (int i = 0; i < p.h; ++i) p.order[i] = i;
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
  std::vector<int> pos(p.h);
  for (int i = 0; i < p.h; ++i) pos[p.order[i]] = i;
  p.edges = pattern.edges();
  std::sort(p.edges.begin(), p.edges.end(), [&](Edge x, Edge y) {
    auto key = [&](Edge e) {
      return std::pair{std::max(pos[e.first], pos[e.second]), std::min(pos[e.first], pos[e.second])};
    };
    return key(x) < key(y);
  });
  p.root_after.assign(p.h, {});
  auto twins = [&](int a, int b) {
    VertexSet na(pattern.neighbors(a)), nb(pattern.neighbors(b));
    na.erase(b);
    nb.erase(a);
    return na == nb;
  };
  std::vector<char> placed(p.h, 0);
  for (int x = 0; x < p.h; ++x) {
    int a = p.order[x];
    if (placed[a]) continue;
    placed[a] = 1;
    int prev = a;
    for (int y = x + 1; y < p.h; ++y) {
      int b = p.order[y];
      if (!placed[b] && twins(a, b)) {
        placed[b] = 1;
        p.root_after[b].push_back(prev);
        prev = b;
      }
    }
  }
  if (copies > 1) {
    const int block = p.h / copies;
    int lead = p.order[0] % block;
    for (int c = 1; c < copies; ++c) p.root_after[c * block + lead].push_back((c - 1) * block + lead);
  }
  return p;
}

struct Counter {
  std::uint64_t nodes = 0;
  std::uint64_t limit = 0;
  bool aborted = false;
  const std::atomic<int>* first_found = nullptr;  // cancels subtrees beyond an earlier success
  int subtree = 0;
};

template <int W>
struct State {
  std::vector<Bits<W>> set, forbid;
  std::vector<int> root;
  Bits<W> freev;
  int rooted = 0;
};

template <int W>
class Search {
 public:
  Search(const Graph& host, const PatternInfo& p) : p_(p), n_(host.order()), nb_(host.order()) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : host.neighbors(v)) nb_[v].set(w);
  }

  MinorSearchResult run(std::uint64_t budget, Execution exec, std::vector<VertexSet>& model) const {
    MinorSearchResult res;
    if (budget < 1) {
      res.status = MinorStatus::BudgetExceeded;
      return res;
    }
    State<W> init;
    init.set.assign(p_.h, {});
    init.forbid.assign(p_.h, {});
    init.root.assign(p_.h, -1);
    for (Vertex v = 0; v < n_; ++v) init.freev.set(v);
    const int first = p_.order[0];

    struct Sub {
      bool found = false;
      bool aborted = false;
      std::uint64_t nodes = 0;
      std::vector<Bits<W>> sets;
    };
    std::vector<Sub> subs(n_);
    std::uint64_t cum = 1;
    auto finish = [&](int r) {
      res.status = MinorStatus::Found;
      res.nodes = cum;
      model.clear();
      for (auto& b : subs[r].sets) {
        std::vector<Vertex> vs;
        b.for_each([&](int v) { vs.push_back(v); });
        model.emplace_back(vs);
      }
    };

    if (exec == Execution::Serial) {
      for (int r = 0; r < n_; ++r) {
        Counter c{0, budget - cum};
        State<W> t = init;
        place(t, first, r);
        subs[r].found = dfs(t, c, subs[r].sets);
        if (c.aborted) {
          res.status = MinorStatus::BudgetExceeded;
          res.nodes = budget;
          return res;
        }
        cum += c.nodes;
        if (subs[r].found) {
          finish(r);
          return res;
        }
      }
      res.status = MinorStatus::Absent;
      res.nodes = cum;
      return res;
    }

    std::atomic<int> first_found{n_};
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < n_; ++r) {
      if (first_found.load() < r) continue;
      Counter c{0, budget - 1, false, &first_found, r};
      State<W> t = init;
      place(t, first, r);
      subs[r].found = dfs(t, c, subs[r].sets);
      subs[r].aborted = c.aborted;
      subs[r].nodes = c.nodes;
      if (subs[r].found) {
        int cur = first_found.load();
        while (r < cur && !first_found.compare_exchange_weak(cur, r)) {}
      }
    }
    // Replay the serial accounting; only subtrees before the first success are consulted.
    for (int r = 0; r < n_; ++r) {
      const auto& s = subs[r];
      if (s.aborted || s.nodes > budget - cum) {
        res.status = MinorStatus::BudgetExceeded;
        res.nodes = budget;
        return res;
      }
      cum += s.nodes;
      if (s.found) {
        finish(r);
        return res;
      }
    }
    res.status = MinorStatus::Absent;
    res.nodes = cum;
    return res;
  }

 private:
  void place(State<W>& s, int i, int r) const {
    s.set[i] = {};
    s.set[i].set(r);
    s.forbid[i] = Bits<W>::below(r);
    s.root[i] = r;
    s.freev.reset(r);
    ++s.rooted;
  }

  static void add(State<W>& s, int i, int v) {
    s.set[i].set(v);
    s.freev.reset(v);
  }

  Bits<W> nbhd(const Bits<W>& b) const {
    Bits<W> out;
    b.for_each([&](int v) { out |= nb_[v]; });
    return out;
  }

  bool touching(const Bits<W>& a, const Bits<W>& b) const { return (nbhd(a) & b).any(); }

  Bits<W> potential(const State<W>& s, int i) const {
    const Bits<W> allowed = s.freev.minus(s.forbid[i]);
    Bits<W> p = s.set[i], frontier = s.set[i];
    while (true) {
      Bits<W> next = (nbhd(frontier) & allowed).minus(p);
      if (!next.any()) return p;
      p |= next;
      frontier = next;
    }
  }

  bool feasible(const State<W>& s) const {
    if (s.freev.count() < p_.h - s.rooted) return false;
    std::vector<Bits<W>> pot(p_.h);
    std::vector<char> have(p_.h, 0);
    for (auto [a, b] : p_.edges) {
      if (s.root[a] < 0 || s.root[b] < 0) continue;
      if (touching(s.set[a], s.set[b])) continue;
      for (int x : {a, b})
        if (!have[x]) {
          pot[x] = potential(s, x);
          have[x] = 1;
        }
      if (!((nbhd(pot[a]) | pot[a]) & pot[b]).any()) return false;
    }
    return true;
  }

  bool cancelled(const Counter& c) const {
    return c.first_found && (c.nodes & 1023) == 0 && c.first_found->load(std::memory_order_relaxed) < c.subtree;
  }

  bool dfs(const State<W>& s, Counter& c, std::vector<Bits<W>>& out) const {
    if (++c.nodes > c.limit || cancelled(c)) {
      c.aborted = true;
      return false;
    }
    if (!feasible(s)) return false;
    for (auto [a, b] : p_.edges) {
      if (s.root[a] < 0 || s.root[b] < 0) continue;
      if (touching(s.set[a], s.set[b])) continue;
      return grow(s, a, b, c, out);
    }
    if (s.rooted == p_.h) {
      out = s.set;
      return true;
    }
    const int i = p_.order[s.rooted];
    int lower = -1;
    for (int pred : p_.root_after[i]) lower = std::max(lower, s.root[pred]);
    bool found = false;
    s.freev.for_each([&](int r) {
      if (found || c.aborted || r <= lower) return;
      State<W> t = s;
      place(t, i, r);
      found = dfs(t, c, out);
    });
    return found;
  }

  // Branch on one free vertex that could bring branch sets a and b closer.
  bool grow(const State<W>& s, int a, int b, Counter& c, std::vector<Bits<W>>& out) const {
    const Bits<W> allowed_a = s.freev.minus(s.forbid[a]);
    const Bits<W> allowed_b = s.freev.minus(s.forbid[b]);
    const Bits<W> na = nbhd(s.set[a]), nb = nbhd(s.set[b]);
    const Bits<W> common = na & nb & (allowed_a | allowed_b);
    if (common.any()) {
      const int v = common.first();
      if (allowed_a.test(v)) {
        State<W> t = s;
        add(t, a, v);
        if (dfs(t, c, out)) return true;
        if (c.aborted) return false;
      }
      if (allowed_b.test(v)) {
        State<W> t = s;
        add(t, b, v);
        if (dfs(t, c, out)) return true;
        if (c.aborted) return false;
      }
      State<W> t = s;
      t.forbid[a].set(v);
      t.forbid[b].set(v);
      return dfs(t, c, out);
    }
    int best_d = -1, best_side = -1, best_v = -1;
    for (int side = 0; side < 2; ++side) {
      const Bits<W>& allowed = side == 0 ? allowed_a : allowed_b;
      const Bits<W> cand = (side == 0 ? na : nb) & allowed;
      if (!cand.any()) continue;
      Bits<W> frontier = allowed & (side == 0 ? nb : na), seen = frontier;
      for (int d = 0; frontier.any() && (best_d < 0 || d < best_d); ++d) {
        const Bits<W> hit = frontier & cand;
        if (hit.any()) {
          best_d = d;
          best_side = side;
          best_v = hit.first();
          break;
        }
        frontier = (nbhd(frontier) & allowed).minus(seen);
        seen |= frontier;
      }
    }
    if (best_v < 0) return false;
    const int i = best_side == 0 ? a : b;
    State<W> t = s;
    add(t, i, best_v);
    if (dfs(t, c, out)) return true;
    if (c.aborted) return false;
    State<W> u = s;
    u.forbid[i].set(best_v);
    return dfs(u, c, out);
  }

  const PatternInfo& p_;
  int n_;
  std::vector<Bits<W>> nb_;
};

template <int W>
MinorSearchResult run_search(const Graph& g, const PatternInfo& p, const MinorSearchOptions& opts,
                             std::vector<VertexSet>& model) {
  return Search<W>(g, p).run(opts.budget, opts.execution, model);
}

MinorSearchResult search_minor(const Graph& host, const Graph& pattern, int copies,
                               const MinorSearchOptions& opts) {
  if (pattern.order() == 0) throw DomainError("pattern must be nonempty");
  MinorSearchResult res;
  const auto reduced = opts.reduce ? reduce_host(host, pattern.min_degree()) : identity_host(host);
  const Graph& g = reduced.graph;
  if (g.order() < pattern.order() || g.size() < pattern.size()) {
    res.status = opts.budget >= 1 ? MinorStatus::Absent : MinorStatus::BudgetExceeded;
    res.nodes = opts.budget >= 1 ? 1 : 0;
    return res;
  }
  const auto info = analyse_pattern(pattern, copies);
  std::vector<VertexSet> sets;
  const int n = g.order();
  if (n <= 64) res = run_search<1>(g, info, opts, sets);
  else if (n <= 128) res = run_search<2>(g, info, opts, sets);
  else if (n <= 256) res = run_search<4>(g, info, opts, sets);
  else if (n <= 512) res = run_search<8>(g, info, opts, sets);
  else if (n <= 1024) res = run_search<16>(g, info, opts, sets);
  else throw SizeLimitError("minor search supports hosts of at most 1024 vertices after reduction");
  if (res.status != MinorStatus::Found) return res;
  MinorModel lifted;
  for (const auto& s : sets) {
    std::vector<Vertex> vs;
    for (Vertex v : s) vs.insert(vs.end(), reduced.rep[v].begin(), reduced.rep[v].end());
    lifted.branch_sets.emplace_back(vs);
  }
  res.model = minimize_model(host, pattern, std::move(lifted));
  if (auto bad = verify_model(host, pattern, res.model))
    throw std::logic_error("minor search produced an invalid model: " + bad->message);
  return res;
}

}  // namespace

bool sets_adjacent(const Graph& host, const VertexSet& a, const VertexSet& b) {
  for (Vertex v : a)
    for (Vertex w : host.neighbors(v))
      if (b.contains(w)) return true;
  return false;
}

MinorModel minimize_model(const Graph& host, const Graph& pattern, MinorModel m) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < pattern.order(); ++i) {
      auto members = m.branch_sets[i].members();
      for (auto it = members.rbegin(); it != members.rend(); ++it) {
        if (m.branch_sets[i].size() <= 1) break;
        VertexSet smaller = m.branch_sets[i];
        smaller.erase(*it);
        if (!induces_connected(host, smaller)) continue;
        bool ok = true;
        for (Vertex j : pattern.neighbors(i))
          if (!sets_adjacent(host, smaller, m.branch_sets[j])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        m.branch_sets[i] = smaller;
        changed = true;
      }
    }
  }
  return m;
}

std::optional<ModelViolation> verify_model(const Graph& host, const Graph& pattern, const MinorModel& m) {
  const auto& bs = m.branch_sets;
  if (static_cast<int>(bs.size()) != pattern.order())
    return ModelViolation{"size", {static_cast<int>(bs.size()), pattern.order()},
                          "model has " + std::to_string(bs.size()) + " branch sets for a pattern of order " +
                              std::to_string(pattern.order())};
  std::vector<int> owner(host.order(), -1);
  for (int i = 0; i < static_cast<int>(bs.size()); ++i) {
    if (bs[i].empty())
      return ModelViolation{"nonempty", {i}, "branch set " + std::to_string(i) + " is empty"};
    for (Vertex v : bs[i]) {
      if (v < 0 || v >= host.order())
        return ModelViolation{"range", {i, v}, "branch set " + std::to_string(i) + " holds non-host vertex " +
                                                   std::to_string(v)};
      if (owner[v] >= 0)
        return ModelViolation{"disjointness", {v, owner[v], i},
                              "vertex " + std::to_string(v) + " lies in branch sets " +
                                  std::to_string(owner[v]) + " and " + std::to_string(i)};
      owner[v] = i;
    }
  }
  for (int i = 0; i < static_cast<int>(bs.size()); ++i)
    if (!induces_connected(host, bs[i]))
      return ModelViolation{"connectivity", {i}, "branch set " + std::to_string(i) + " is not connected"};
  for (auto [u, v] : pattern.edges())
    if (!sets_adjacent(host, bs[u], bs[v]))
      return ModelViolation{"edge coverage", {u, v},
                            "no host edge between branch sets " + std::to_string(u) + " and " + std::to_string(v)};
  return std::nullopt;
}

MinorSearchResult find_minor(const Graph& host, const Graph& pattern, const MinorSearchOptions& opts) {
  return search_minor(host, pattern, 1, opts);
}

PackingSearchResult find_disjoint_minors(const Graph& host, const Graph& pattern, int k,
                                         const MinorSearchOptions& opts) {
  if (k < 1) throw DomainError("packing size must be at least 1");
  auto res = search_minor(host, disjoint_copies(pattern, k), k, opts);
  PackingSearchResult out{res.status, {}, res.nodes};
  if (res.status == MinorStatus::Found)
    for (int c = 0; c < k; ++c) {
      MinorModel m;
      for (int i = 0; i < pattern.order(); ++i) m.branch_sets.push_back(res.model.branch_sets[c * pattern.order() + i]);
      out.models.push_back(std::move(m));
    }
  return out;
}

nlohmann::json model_json(const MinorModel& m) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& b : m.branch_sets) sets.push_back(b.members());
  return sets;
}

MinorModel model_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("model must be an array of branch sets");
  MinorModel m;
  for (const auto& b : j) {
    if (!b.is_array()) throw ParseError("branch set must be an array");
    std::vector<Vertex> vs;
    for (const auto& x : b) {
      if (!x.is_number_integer()) throw ParseError("branch set entries must be integers");
      vs.push_back(x.get<Vertex>());
    }
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw ParseError("repeated vertex in branch set");
    m.branch_sets.emplace_back(vs);
  }
  return m;
}

const char* status_name(MinorStatus s) {
  switch (s) {
    case MinorStatus::Found: return "found";
    case MinorStatus::Absent: return "absent";
    case MinorStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

}  // namespace minorlab
