#pragma once

#include <vector>

#include "reebsym/decimal.hpp"
#include "reebsym/surface_complex.hpp"

namespace reebsym {

/// A connected component of a critical level set.
struct ReebVertex {
  int id = 0;
  Decimal value;
  std::vector<int> critical_vertices;  // mesh vertices with != 2 sign changes
  std::vector<int> level_vertices;     // every mesh vertex of the component
  std::vector<int> crossing_edges;     // mesh edges crossed strictly inside
};

/// A maximal family of regular level components between two critical ones.
struct ReebEdge {
  int id = 0;
  int lower = 0;
  int upper = 0;
  Decimal lower_value;
  Decimal upper_value;
  int smallest_mesh_edge = 0;
  int lower_slab = 0;  // slab index adjacent to the lower vertex
  int upper_slab = 0;  // slab index adjacent to the upper vertex
  int lower_face = 0;  // a mesh face meeting the edge right above `lower`
  int upper_face = 0;  // a mesh face meeting the edge right below `upper`
};

class ReebGraph {
 public:
  ReebGraph() = default;
  ReebGraph(std::vector<ReebVertex> vertices, std::vector<ReebEdge> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const ReebVertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const ReebEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<ReebVertex>& vertices() const { return vertices_; }
  const std::vector<ReebEdge>& edges() const { return edges_; }

  /// Incident edge ends; a loop would count twice.
  int degree(int v) const;
  int betti1() const { return edge_count() - vertex_count() + 1; }
  bool is_connected() const;

 private:
  std::vector<ReebVertex> vertices_;
  std::vector<ReebEdge> edges_;
};

struct ReebPoint {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int id = 0;
  friend auto operator<=>(const ReebPoint&, const ReebPoint&) = default;
};

/// The quotient map from mesh cells to the Reeb graph.
struct ReebProjection {
  std::vector<Decimal> critical_values;            // sorted, distinct
  std::vector<ReebPoint> vertex_map;               // per mesh vertex
  std::vector<std::vector<ReebPoint>> face_map;    // per mesh face, sorted
  std::vector<std::vector<int>> slab_face_edge;    // [slab][face] -> Reeb edge or -1

  int reeb_vertex_of(int mesh_vertex) const;       // -1 if on an edge
};

struct ReebResult {
  ReebGraph graph;
  ReebProjection projection;
};

/// Throws NotGeneric for fields with equal values across a mesh edge.
ReebResult compute_reeb(const SurfaceComplex& complex, const ScalarField& field);

struct Germ {
  enum class Direction { Up, Down };
  int edge = 0;
  Direction direction = Direction::Up;
  friend bool operator==(const Germ&, const Germ&) = default;
};

struct Star {
  int center = 0;
  std::vector<Germ> germs;
  int index_of(int edge, Germ::Direction direction) const;
};

/// Throws NoSuchVertex.
Star star_of(const ReebGraph& graph, int v);

}  // namespace reebsym
