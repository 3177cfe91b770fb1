#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace minorlab {

using Vertex = int;

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { normalize(); }

  static VertexSet range(Vertex lo, Vertex hi) {
    VertexSet s;
    for (Vertex v = lo; v < hi; ++v) s.members_.push_back(v);
    return s;
  }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }

  void insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
  }
  void erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
  }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace minorlab
