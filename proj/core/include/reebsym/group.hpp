#pragma once

#include <cstddef>
#include <vector>

#include "reebsym/permutation.hpp"
#include "reebsym/reeb.hpp"
#include "reebsym/surface_complex.hpp"

namespace reebsym {

/// Combinatorial automorphism of the mesh preserving the field.
///
/// `dart_perm` acts on darts as (face, edge) flags: the image of a dart is the
/// dart of the image edge inside the image face. It commutes with twin, and
/// with next when orientation preserving (with prev otherwise).
struct SurfAutomorphism {
  Permutation vertex_perm;
  Permutation dart_perm;
  bool orientation_preserving = true;

  int vertex(int v) const { return vertex_perm(v); }
  int dart(int d) const { return dart_perm(d); }
  int face(int f) const { return SurfaceComplex::face_of(dart_perm(3 * f)); }
  int edge(const SurfaceComplex& complex, int e) const;

  friend SurfAutomorphism operator*(const SurfAutomorphism& a, const SurfAutomorphism& b);
};

/// Enumerated group of field-preserving automorphisms, sorted by vertex
/// permutation so that the identity comes first.
class StabilizerGroup {
 public:
  StabilizerGroup() = default;
  explicit StabilizerGroup(std::vector<SurfAutomorphism> elements);

  std::size_t size() const { return elements_.size(); }
  const SurfAutomorphism& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<SurfAutomorphism>& elements() const { return elements_; }

  int index_of(const Permutation& vertex_perm) const;
  /// Index of element(a) * element(b).
  int compose(int a, int b) const;
  int inverse(int a) const;
  PermutationGroup vertex_group() const;

 private:
  std::vector<SurfAutomorphism> elements_;
};

/// Field-preserving automorphisms without the genericity precondition; used
/// on refined surfaces whose collars repeat values. Throws SizeLimit.
StabilizerGroup compute_field_automorphisms(const SurfaceComplex& complex, const ScalarField& field,
                                            std::size_t size_limit = 10000);

/// Throws NotGeneric, or SizeLimit when the group has more than `size_limit` elements.
StabilizerGroup compute_stabilizer_group(const SurfaceComplex& complex, const ScalarField& field,
                                         std::size_t size_limit = 10000);

/// Automorphism of the Reeb graph.
struct ReebAutomorphism {
  Permutation vertices;
  Permutation edges;

  /// Single permutation on vertices followed by edges (edge e is point V+e).
  Permutation combined() const;
  friend bool operator==(const ReebAutomorphism&, const ReebAutomorphism&) = default;
};

ReebAutomorphism induce_reeb_automorphism(const SurfAutomorphism& h, const ReebGraph& graph,
                                          const ReebProjection& projection);

/// Germ permutation of a star together with the element it came from.
struct LocalAction {
  Permutation germs;
  int source = 0;  // index into the stabilizer group
};

struct LocalStabilizer {
  int reeb_vertex = 0;
  Star star;
  std::vector<int> fixing;            // group elements whose Reeb action fixes the vertex
  PermutationGroup reeb_stabilizer;   // G_v, on combined Reeb points
  std::vector<LocalAction> restriction;  // one per entry of `fixing`
  PermutationGroup local;             // G_v^loc, on germ indices
};

/// `rho` holds induce_reeb_automorphism for every group element.
LocalStabilizer local_stabilizer(const StabilizerGroup& group, const std::vector<ReebAutomorphism>& rho,
                                 const ReebGraph& graph, int reeb_vertex);

/// Elements fixing the critical component whose germ action lies in H.
struct Preimage {
  PermutationGroup subgroup;     // H
  std::vector<int> members;      // group element indices, ascending
  std::vector<Permutation> phi;  // germ permutation of each member
};

/// H is the closure of `generators`; an empty list means H = G_v^loc.
/// Throws NotASubgroup when a generator lies outside G_v^loc.
Preimage phi_and_preimage(const LocalStabilizer& local, const std::vector<Permutation>& generators);

/// Convenience bundle for the whole field.
struct SymmetryData {
  StabilizerGroup group;
  std::vector<ReebAutomorphism> rho;
  PermutationGroup image;  // G = rho(group) on combined Reeb points
};

SymmetryData analyze_symmetry(const SurfaceComplex& complex, const ScalarField& field, const ReebResult& reeb,
                              std::size_t size_limit = 10000);

}  // namespace reebsym
