#pragma once

// Face-width on the torus by enumerating simple vertex-face cycles and testing Z2 homology.
// On the torus a simple closed curve is contractible iff it bounds, iff its class is zero.

#include <bitset>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "minorlab/embedding.hpp"

namespace oracle {

using minorlab::EmbeddedGraph;

class TorusFaceWidth {
 public:
  explicit TorusFaceWidth(const EmbeddedGraph& e) : n_(e.order()) {
    const auto& faces = e.faces();
    nodes_ = n_ + static_cast<int>(faces.size());
    adj_.resize(nodes_);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
      for (int v : faces[f]) add(v, n_ + f);
    // Each graph edge u-v with faces f, g bounds the quadrilateral u-f-v-g.
    for (auto [u, v] : e.graph().edges()) {
      int f = n_ + e.face_of(u, v), g = n_ + e.face_of(v, u);
      Bits quad;
      quad.flip(id(u, f));
      quad.flip(id(v, f));
      quad.flip(id(u, g));
      quad.flip(id(v, g));
      reduce_insert(quad);
    }
  }

  // Fewest vertex nodes on a non-bounding simple radial cycle, searching cycles of up to max_vertices.
  int value(int max_vertices) {
    best_ = max_vertices + 1;
    std::vector<int> path;
    std::vector<char> on(nodes_, 0);
    for (int root = 0; root < n_; ++root) {
      path = {root};
      on.assign(nodes_, 0);
      on[root] = 1;
      dfs(root, path, on, 1);
    }
    return best_;
  }

 private:
  using Bits = std::bitset<1024>;

  void add(int v, int f) {
    if (edge_id_.emplace(std::make_pair(v, f), static_cast<int>(edge_id_.size())).second) {
      adj_[v].push_back(f);
      adj_[f].push_back(v);
    }
  }
  int id(int v, int f) const { return edge_id_.at({v, f}); }

  int pivot(const Bits& b) const {
    for (int i = 0; i < 1024; ++i)
      if (b[i]) return i;
    return -1;
  }
  void reduce(Bits& b) const {
    for (const auto& [p, row] : basis_)
      if (b[p]) b ^= row;
  }
  void reduce_insert(Bits b) {
    reduce(b);
    int p = pivot(b);
    if (p < 0) return;
    for (auto& [q, row] : basis_)
      if (row[p]) row ^= b;
    basis_.emplace(p, b);
  }

  // Cycles are rooted at their smallest vertex node.
  void dfs(int v, std::vector<int>& path, std::vector<char>& on, int vertices) {
    const int root = path[0];
    for (int w : adj_[v]) {
      if (w == root && path.size() >= 4) {
        Bits b;
        for (std::size_t i = 0; i < path.size(); ++i) {
          int a = path[i], c = path[(i + 1) % path.size()];
          b.flip(a < n_ ? id(a, c) : id(c, a));
        }
        reduce(b);
        if (b.any() && vertices < best_) best_ = vertices;
        continue;
      }
      if (on[w] || (w < n_ && w < root)) continue;
      int nv = vertices + (w < n_ ? 1 : 0);
      if (nv >= best_) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w, path, on, nv);
      path.pop_back();
      on[w] = 0;
    }
  }

  int n_ = 0, nodes_ = 0, best_ = 0;
  std::vector<std::vector<int>> adj_;
  std::map<std::pair<int, int>, int> edge_id_;
  std::map<int, Bits> basis_;
};

}  // namespace oracle
