#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "reebsym/atom.hpp"
#include "reebsym/group.hpp"
#include "reebsym/surface_complex.hpp"

namespace reebsym {

/// Where a vertex of the refined surface comes from.
struct RefinedVertex {
  enum class Kind { Original, Crossing, QuadCenter, CollarCopy };
  Kind kind = Kind::Original;
  int source = 0;   // mesh vertex, mesh edge, mesh face, or the level vertex it copies
  int region = -1;  // 2-element containing it, -1 on the critical component
};

struct RefinedFace {
  int source = -1;  // mesh face it subdivides, -1 for collar faces
  int region = -1;  // 2-element it belongs to
  int walk = -1;    // collar walk, -1 for subdivided faces
};

/// A closed walk around one 2-element along the critical component, in
/// refined vertex ids. `copies[j]` is the collar copy facing `points[j]`.
struct CollarWalk {
  int id = 0;
  int region = 0;
  std::vector<int> points;
  std::vector<int> copies;
};

/// The input surface split along the critical component, with an annular
/// collar glued between the component and every adjacent 2-element.
struct RefinedSurface {
  SurfaceComplex complex;
  ScalarField field;
  Decimal level;
  std::vector<RefinedVertex> vertices;
  std::vector<RefinedFace> faces;
  std::vector<CollarWalk> walks;
  int region_count = 0;
  std::vector<int> region_vertex;   // a refined vertex inside each region
  std::vector<int> germ_to_region;  // per star germ

  bool is_identity = false;  // no subdivision: the input mesh itself

  // lookup tables used to transport automorphisms of the input mesh
  std::vector<int> crossing_vertex;  // per mesh edge, -1 if not crossed
  std::vector<int> quad_vertex;      // per mesh face, -1 if none
  std::map<std::pair<int, int>, int> copy_of;  // (level vertex, neighbour) -> copy
  std::vector<int> copy_neighbour;             // per refined vertex, -1 unless a copy
};

/// Requires a special vertex: germ_to_region comes from the report.
RefinedSurface build_refinement(const SurfaceComplex& complex, const ScalarField& field,
                                const CriticalComponent& component, const PartitionXi& xi,
                                const std::vector<int>& germ_to_region);

/// The unrefined mesh dressed as a refinement; used for the trivial subgroup.
RefinedSurface identity_refinement(const SurfaceComplex& complex, const ScalarField& field,
                                   const CriticalComponent& component, const PartitionXi& xi,
                                   const std::vector<int>& germ_to_region);

/// Transports an automorphism of the input mesh that preserves the critical
/// component. Returns nullopt if it does not.
std::optional<SurfAutomorphism> lift_to_refinement(const RefinedSurface& refined, const SurfaceComplex& complex,
                                                   const SurfAutomorphism& h);

/// Builds the flag action from a vertex permutation; nullopt unless faces map to faces.
std::optional<SurfAutomorphism> automorphism_from_vertex_map(const SurfaceComplex& complex,
                                                             const Permutation& vertex_perm);

/// Action on 2-elements, read off the region representatives.
std::vector<int> region_action(const RefinedSurface& refined, const Permutation& vertex_perm);

/// Germ permutation through germ_to_region.
Permutation refined_phi(const RefinedSurface& refined, const Permutation& vertex_perm);

}  // namespace reebsym
