#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorlab/graph.hpp"

namespace minorlab {

// Disjoint paths; an X-Y linkage additionally has each path running from X to Y with no other
// vertex in X or Y, and covers X and Y (so |X| = |Y| = number of paths).
struct Linkage {
  std::vector<Path> paths;
  VertexSet x, y;

  int order() const { return static_cast<int>(paths.size()); }
  VertexSet vertices() const;
  std::vector<Edge> edges() const;  // sorted
  friend bool operator==(const Linkage&, const Linkage&) = default;
};

// Empty when valid, else the first violated condition.
std::optional<std::string> validate_linkage(const Graph& g, const Linkage& l);

// Every X-Y linkage of g; stops after `limit` results.
std::vector<Linkage> enumerate_linkages(const Graph& g, const VertexSet& x, const VertexSet& y,
                                        std::size_t limit = SIZE_MAX);

struct SingularOptions {
  int cap = 10;  // vertices
};

// Spans g and no other X-Y linkage has a different union (vertices and edges).
bool is_singular(const Graph& g, const Linkage& l, SingularOptions opts = {});
// pw(g) <= order; DomainError unless l is singular.
bool check_singular_pathwidth(const Graph& g, const Linkage& l, SingularOptions opts = {});

struct SingularInstance {
  Linkage linkage;
  int pathwidth;
};
// Every singular linkage of g (paths listed from their X end), with the exact path-width of g.
std::vector<SingularInstance> singular_linkages(const Graph& g, SingularOptions opts = {});

enum class SegmentKind { Empty, Trivial, Proper };

// Maximal subpath of `path` that starts and ends in `marked`.
struct Segment {
  SegmentKind kind = SegmentKind::Empty;
  std::size_t first = 0, last = 0;  // indices into the path
};
Segment segment_of(const Path& path, const std::vector<char>& marked);

// Paths starting in h with no further vertex in h, ending on the linkage.
struct Comb {
  VertexSet h;
  std::vector<Path> paths;
};

// (comb, h)-segments of each linkage path.
std::vector<Segment> comb_segments(const Graph& g, const Linkage& l, const Comb& c);
std::optional<std::string> validate_comb(const Graph& g, const Linkage& l, const Comb& c);

// A comb with at least t paths; DomainError when g has fewer than t disjoint h-(X ∪ Y) paths.
Comb extract_comb(const Graph& g, const Linkage& l, const VertexSet& h, int t);

// The comb paths sharing an endpoint with a segment of a path in `sub`; DomainError unless
// every path of `sub` belongs to l.
Comb subcomb(const Graph& g, const Linkage& l, const Comb& c, const Linkage& sub);

using Cycle = std::vector<Vertex>;

// Every path meets every cycle in one subpath, in the listed order read from one of its ends.
bool is_orthogonal(const Linkage& l, const std::vector<Cycle>& cycles);

struct Orthogonalized {
  std::vector<Cycle> cycles;  // C'_1..C'_{s'}, a subsequence of the input cycles
  VertexSet x;                // starts, on the last cycle
  Linkage linkage;
  std::string method;         // "unchanged", "trimmed" or "flow"
};

// Concentric cycles C_1 (outermost) .. C_s in the plane graph `plane`; `extra` meets `plane` only on
// C_1; l links X ⊆ C_s to Y ⊆ C_1. Finds s_prime of the cycles and an X'-Y linkage of the same
// order orthogonal to them. DomainError on violated hypotheses; nullopt when nothing is found.
std::optional<Orthogonalized> orthogonalize(const Graph& plane, const Graph& extra, const std::vector<Cycle>& cycles,
                                            const Linkage& l, int s_prime);

// Rings C_1..C_s of `ring_length` vertices, ring i holding ids (i-1)*ring_length .. i*ring_length-1,
// joined by spiral paths plus random radial and diagonal chords. `extra` adds a handle outside C_1.
struct CylinderInstance {
  Graph plane, extra;
  std::vector<Cycle> cycles;
  Linkage linkage;
};
CylinderInstance cylinder_instance(int s, int t, std::uint64_t seed, bool local_peak = false);

nlohmann::json linkage_json(const Linkage& l);
Linkage linkage_from_json(const nlohmann::json& j);
nlohmann::json comb_json(const Comb& c);
Comb comb_from_json(const nlohmann::json& j);

}  // namespace minorlab
