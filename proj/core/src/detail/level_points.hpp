#pragma once

#include <array>
#include <vector>

#include "reebsym/atom.hpp"
#include "reebsym/reeb.hpp"
#include "reebsym/surface_complex.hpp"

namespace reebsym::detail {

// Segments of one critical level component, one per face at most.
//
// Boundary positions of a face run counter-clockwise: corner i sits at 2i and
// the edge from corner i to corner i+1 at 2i+1.
class LevelSegments {
 public:
  LevelSegments(const SurfaceComplex& complex, const ScalarField& field, const ReebVertex& component);

  bool in_component(int face) const { return present_[static_cast<std::size_t>(face)] != 0; }
  bool has_endpoint(int face, const LevelPoint& p) const;
  LevelPoint other_end(int face, const LevelPoint& p) const;
  // Face on the far side of `exit` continuing the component.
  int next_face(int face, const LevelPoint& exit) const;
  // Whether the higher side lies on the left when walking from `from` to `to`.
  bool above_on_left(int face, const LevelPoint& from, const LevelPoint& to) const;

 private:
  struct End {
    LevelPoint point;
    int position = 0;
  };
  int position_of(int face, const LevelPoint& p) const;

  const SurfaceComplex& complex_;
  const ScalarField& field_;
  Decimal level_;
  std::vector<char> present_;
  std::vector<std::array<End, 2>> ends_;
};

}  // namespace reebsym::detail
