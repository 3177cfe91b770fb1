#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "minorlab/execution.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

using Point = std::pair<double, double>;

// Graph with a rotation system (cyclic neighbour order per vertex) on an orientable surface.
// Faces follow dart u->v by v->w, where w succeeds u in the rotation at v.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  // Throws DomainError unless the lists describe a simple undirected graph.
  explicit EmbeddedGraph(std::vector<std::vector<Vertex>> rotation);

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
  int slot(Vertex v, Vertex w) const;  // index of w in the rotation at v
  Vertex next_around(Vertex v, Vertex w) const;
  Vertex prev_around(Vertex v, Vertex w) const;

  // Facial walks; face f visits darts f[0]->f[1] -> ... -> f[last]->f[0].
  const std::vector<std::vector<Vertex>>& faces() const { return faces_; }
  int face_of(Vertex u, Vertex v) const { return dart_face_[u][slot(u, v)]; }
  int euler_genus() const;  // summed over components
  int euler_characteristic() const;
  bool faces_are_cycles() const;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<int>> slot_of_;     // slot_of_[v][i]: position of v in rotation of rotation_[v][i]
  std::vector<std::vector<int>> dart_face_;   // by (vertex, rotation slot)
  std::vector<std::vector<Vertex>> faces_;
};

// Rotation by counter-clockwise angle of the straight-line drawing.
EmbeddedGraph embed_by_coordinates(const Graph& g, const std::vector<Point>& pos);

// Signed shoelace area of a closed walk.
double signed_area(const std::vector<Vertex>& walk, const std::vector<Point>& pos);

// Text format: first line n, then line v lists the rotation at v.
EmbeddedGraph read_rotation_system(std::istream& in);
void write_rotation_system(std::ostream& out, const EmbeddedGraph& e);

enum class Contractibility { Contractible, Noncontractible };

// Cuts the surface along the cycle (vertex sequence) and checks whether a side is a disc.
Contractibility cut_contractibility(const EmbeddedGraph& e, const std::vector<Vertex>& cycle);

// Vertex-face incidence graph: vertices keep their ids, face f becomes node order()+f.
EmbeddedGraph radial_graph(const EmbeddedGraph& e);

struct FaceWidthOptions {
  int cap = 400;  // radial-graph nodes
  Execution execution = Execution::Parallel;
};

struct FaceWidth {
  bool unbounded = false;                 // genus 0
  int value = 0;
  std::vector<Vertex> radial_cycle;       // witness: node ids of the radial graph
};

FaceWidth face_width(const EmbeddedGraph& e, const FaceWidthOptions& opts = {});

// Face-width of g - x inside the surface of e: noncontractible radial cycles counted by the
// vertices they meet outside x.
FaceWidth face_width_after_deletion(const EmbeddedGraph& e, const VertexSet& x, const FaceWidthOptions& opts = {});

// fw(e - x) >= fw(e) - |x|.
bool face_width_deletion_check(const EmbeddedGraph& e, const VertexSet& x, const FaceWidthOptions& opts = {});

}  // namespace minorlab
