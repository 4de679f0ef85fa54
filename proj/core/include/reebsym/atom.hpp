#pragma once

#include <array>
#include <utility>
#include <vector>

#include "reebsym/decimal.hpp"
#include "reebsym/reeb.hpp"
#include "reebsym/surface_complex.hpp"

namespace reebsym {

/// A point of a level set: a mesh vertex on the level or the crossing on an edge.
struct LevelPoint {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Edge;
  int id = 0;
  friend auto operator<=>(const LevelPoint&, const LevelPoint&) = default;
};

/// One end of an arc: end 0 is where the arc starts, end 1 where it finishes.
struct ArcEnd {
  int arc = 0;
  int end = 0;
  int half_edge() const { return 2 * arc + end; }
  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

/// Edge of the critical component between two saddles (possibly the same).
///
/// Arcs are oriented so that the region on their left has the higher field
/// value. `trace` lists the interior points in order; `faces` lists the mesh
/// face carrying each segment, so faces.size() == trace.size() + 1.
struct Arc {
  int id = 0;
  int start = 0;  // saddle index
  int finish = 0;
  std::vector<LevelPoint> trace;
  std::vector<int> faces;
};

/// A critical level component viewed as a ribbon graph.
struct CriticalComponent {
  int reeb_vertex = -1;
  Decimal level;
  std::vector<int> saddles;  // mesh vertex ids, sorted
  std::vector<Arc> arcs;
  std::vector<std::vector<ArcEnd>> rotation;  // per saddle, counter-clockwise

  int saddle_index(int mesh_vertex) const;

  /// Abstract ribbon graph with no mesh behind it.
  static CriticalComponent ribbon(int saddle_count, const std::vector<std::pair<int, int>>& arcs,
                                  std::vector<std::vector<ArcEnd>> rotation);
};

struct BoundaryWalk {
  enum class Side { Left, Right };
  struct Step {
    int arc = 0;
    bool forward = true;
    Side side = Side::Left;
    friend bool operator==(const Step&, const Step&) = default;
  };
  int id = 0;
  std::vector<Step> steps;
  int region = -1;  // bounding 2-element, once bound to a partition
};

struct Atom {
  CriticalComponent component;
  std::vector<BoundaryWalk> walks;
  int euler = 0;
  int genus = 0;
};

/// Piece of a mesh face on one side of the critical component.
enum class FaceSide { Whole, Above, Below };

struct Region {
  int id = 0;
  std::vector<std::pair<int, FaceSide>> pieces;  // sorted
  std::vector<int> vertices;                     // mesh vertices off the component
};

/// Partition of the surface by the critical component.
struct PartitionXi {
  std::vector<int> zero_elements;  // saddle mesh vertex ids
  std::vector<int> one_elements;   // arc ids
  std::vector<Region> two_elements;
  std::vector<char> face_cut;      // per mesh face: carries a segment of the component
  std::vector<std::array<int, 3>> face_region;  // per face, indexed by FaceSide

  int region_of(int face, FaceSide side) const;
  int element_count() const {
    return static_cast<int>(zero_elements.size() + one_elements.size() + two_elements.size());
  }
};

struct SpecialReport {
  bool special = false;
  std::vector<int> germ_to_region;
  std::pair<int, int> failure_witness{-1, -1};  // two germs sharing one region
  int unmatched_region = -1;                    // region hit by no germ
};

/// Throws NotCritical when the Reeb vertex holds no saddle.
CriticalComponent extract_critical_component(const SurfaceComplex& complex, const ScalarField& field,
                                             const ReebGraph& graph, int reeb_vertex);

std::vector<BoundaryWalk> boundary_walks(const CriticalComponent& component);

PartitionXi build_partition(const SurfaceComplex& complex, const ScalarField& field,
                            const ReebGraph& graph, const CriticalComponent& component);

/// Fills BoundaryWalk::region from the side of the first traversed arc.
void bind_walk_regions(std::vector<BoundaryWalk>& walks, const CriticalComponent& component,
                       const PartitionXi& xi);

SpecialReport is_special(const Star& star, const PartitionXi& xi, const ReebGraph& graph);

Atom atom_stats(const CriticalComponent& component);

}  // namespace reebsym
