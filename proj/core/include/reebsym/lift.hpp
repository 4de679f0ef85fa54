#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reebsym/atom.hpp"
#include "reebsym/group.hpp"
#include "reebsym/reeb.hpp"
#include "reebsym/refinement.hpp"

namespace reebsym {

/// Action of one automorphism on the partition: saddles, arcs (with a flag
/// for reversed direction) and regions, each by index.
struct XiPermutation {
  std::vector<int> saddles;
  std::vector<int> arcs;
  std::vector<char> arc_reversed;
  std::vector<int> regions;
  bool orientation_preserving = true;

  /// Saddles, then arcs, then regions as one permutation of element ids.
  Permutation combined() const;
  friend bool operator==(const XiPermutation&, const XiPermutation&) = default;
};

XiPermutation act_on_xi(const SurfaceComplex& complex, const CriticalComponent& component, const PartitionXi& xi,
                        const SurfAutomorphism& h);

/// Everything the lifting step needs for one critical vertex and subgroup.
struct LiftProblem {
  SurfaceComplex complex;
  ScalarField field;
  ReebResult reeb;
  int reeb_vertex = 0;
  CriticalComponent component;
  std::vector<BoundaryWalk> walks;
  PartitionXi xi;
  SpecialReport special;
  SymmetryData symmetry;
  LocalStabilizer local;
  Preimage preimage;
  std::vector<XiPermutation> actions;  // aligned with preimage.members
};

/// Runs the upstream pipeline. Throws NoSuchVertex, NotCritical, NotASubgroup, SizeLimit.
LiftProblem prepare_lift(const SurfaceComplex& complex, const ScalarField& field, int reeb_vertex,
                         const std::vector<Permutation>& generators, std::size_t size_limit = 10000);

struct ConditionCWitness {
  int element = 0;        // group element index
  int fixed_region = 0;
  int dimension = 0;      // of the offending element
  int moved = 0;          // its index within that dimension
  bool orientation = false;  // fixed but with reversed orientation
};

struct ConditionCReport {
  bool holds = true;
  std::optional<ConditionCWitness> witness;
};

ConditionCReport check_condition_C(const LiftProblem& problem);

struct XiAction {
  std::vector<Permutation> table;        // per element of H, on combined element ids
  std::vector<XiPermutation> actions;    // same, split by dimension
  std::vector<int> representatives;      // a group element realizing each
  bool free_on_regions = true;
};

/// Throws ConditionCViolated, or NotWellDefined when two representatives disagree
/// or a nontrivial element fixes a region.
XiAction xi_action(const LiftProblem& problem);

struct OrbitChoice {
  int representative = 0;
  std::vector<int> members;       // ascending
  std::vector<int> transporters;  // group element taking the representative to each member
};

struct LiftData {
  std::vector<OrbitChoice> saddle_orbits;
  std::vector<OrbitChoice> arc_orbits;
  std::vector<int> arc_subdivision;                // per arc orbit, interior point count
  std::vector<OrbitChoice> region_orbits;
  std::vector<std::vector<int>> rotation_offsets;  // [element of H][saddle]
  std::vector<std::vector<int>> collar_twists;     // [element of H][collar walk]
};

/// Section of the germ action on the refined surface.
struct Section {
  RefinedSurface refined;
  PermutationGroup subgroup;              // H
  std::vector<SurfAutomorphism> images;   // s(g), aligned with subgroup.elements()
  std::vector<Permutation> phi;           // phi(s(g))
  LiftData data;
};

/// Throws NotSpecial, ConditionCViolated, OrbitMismatch, TwistUnrealizable.
Section construct_section(const LiftProblem& problem);

struct OracleResult {
  bool found = false;
  std::vector<SurfAutomorphism> images;  // aligned with the subgroup elements
  std::size_t automorphisms = 0;         // field-preserving automorphisms of the refinement
  std::size_t preimage = 0;              // of those, the ones acting inside H
  std::size_t assignments = 0;           // generator images tried
};

/// Exhaustive search over generator images on the refined surface. Throws SizeLimit.
OracleResult find_section_oracle(const RefinedSurface& refined, const PermutationGroup& subgroup,
                                 std::size_t size_limit = 10000);

struct SectionCheck {
  bool passed = true;
  std::string witness;
};

struct SectionVerification {
  SectionCheck homomorphism;
  SectionCheck section;
  SectionCheck field_preserving;
  SectionCheck automorphism;

  bool passed() const {
    return homomorphism.passed && section.passed && field_preserving.passed && automorphism.passed;
  }
};

SectionVerification verify_section(const Section& section);

}  // namespace reebsym
