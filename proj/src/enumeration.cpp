#include "minorlab/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minorlab/errors.hpp"

namespace minorlab {

namespace {

// Iterated neighbourhood-multiset refinement; colours renumbered by sorted signature.
std::vector<int> refine(const Graph& g, std::vector<int> colour) {
  const int n = g.order();
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first.push_back(colour[v]);
      std::vector<int> nc;
      for (Vertex w : g.neighbors(v)) nc.push_back(colour[w]);
      std::sort(nc.begin(), nc.end());
      sig[v].first.insert(sig[v].first.end(), nc.begin(), nc.end());
      sig[v].second = v;
    }
    std::vector<std::vector<int>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    if (static_cast<int>(keys.size()) == classes) return colour;
    classes = static_cast<int>(keys.size());
  }
}

std::string code_for(const Graph& g, const std::vector<int>& colour) {
  const int n = g.order();
  std::vector<Vertex> at(n);
  for (Vertex v = 0; v < n; ++v) at[colour[v]] = v;
  std::string code(static_cast<std::size_t>(n) * (n - 1) / 2, '0');
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.has_edge(at[i], at[j])) code[k] = '1';
  return code;
}

void search(const Graph& g, const std::vector<int>& colour, std::string& best,
            std::vector<int>& best_colour) {
  const int n = g.order();
  std::vector<int> count(n, 0);
  for (int c : colour) ++count[c];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (count[c] > 1) { target = c; break; }
  if (target < 0) {
    auto code = code_for(g, colour);
    if (best_colour.empty() || code < best) {
      best = code;
      best_colour = colour;
    }
    return;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    std::vector<int> next(n);
    for (Vertex u = 0; u < n; ++u) next[u] = 2 * colour[u] + (colour[u] == target && u != v ? 1 : 0);
    search(g, refine(g, next), best, best_colour);
  }
}

std::vector<int> canonical_labelling(const Graph& g) {
  std::string best;
  std::vector<int> best_colour;
  if (g.order() == 0) return best_colour;
  search(g, refine(g, std::vector<int>(g.order(), 0)), best, best_colour);
  return best_colour;
}

}  // namespace

std::string canonical_code(const Graph& g) {
  auto lab = canonical_labelling(g);
  return std::to_string(g.order()) + ":" + (g.order() ? code_for(g, lab) : std::string());
}

Graph canonical_relabel(const Graph& g) {
  auto lab = canonical_labelling(g);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.push_back(make_edge(lab[u], lab[v]));
  return Graph(g.order(), e);
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1) throw DomainError("need n >= 1");
  if (n > 10) throw SizeLimitError("connected graph enumeration capped at 10 vertices");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    // Every connected graph has a vertex whose removal leaves it connected.
    std::map<std::string, Graph> seen;
    for (const auto& h : level) {
      auto base = h.edges();
      for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
        auto e = base;
        for (int u = 0; u < m - 1; ++u)
          if (mask >> u & 1) e.emplace_back(u, m - 1);
        Graph cand(m, e);
        auto code = canonical_code(cand);
        if (!seen.count(code)) seen.emplace(code, canonical_relabel(cand));
      }
    }
    level.clear();
    for (auto& [code, gr] : seen) level.push_back(std::move(gr));
  }
  return level;
}

}  // namespace minorlab
